"""Filling functions of a presentation: enumerate null-homotopic words up
to a length and take, for every measure, the maximum of the word-level
values."""

import csv
import io
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .diagram import (check, dgl, ediam, measure, sequence_to_diagram, TooManyTrees)
from .dps import SearchBudget, ffl_search, fl_search, reduced_area_search
from .presentation import cayley_ball
from .words import invert

MEASURES = ("area", "fl", "ffl", "idiam", "ediam", "gl", "dgl", "rad")


def enumerate_null_words(p, oracle, n):
    """Every freely reduced word of length <= n that the oracle declares
    trivial, in shortlex order.  Raises OracleIndecisive on Unknown."""
    letters = p.alphabet.letters
    out = [""]
    frontier = [""]
    for _ in range(n):
        grown = []
        for w in frontier:
            for c in letters:
                if w and w[-1] == c.swapcase():
                    continue
                grown.append(w + c)
        for w in grown:
            if oracle.decide(w):
                out.append(w)
        frontier = grown
    return out


def letter_symmetries(p):
    """Signed permutations of the generators that map the relator closure
    onto itself, as translation tables."""
    gens = p.alphabet.generators
    closure = p.closure
    out = []
    for perm in itertools.permutations(gens):
        for signs in itertools.product((False, True), repeat=len(gens)):
            table = {}
            for g, h, s in zip(gens, perm, signs):
                img = h.upper() if s else h
                table[g] = img
                table[g.upper()] = img.swapcase()
            tr = str.maketrans(table)
            if {c.translate(tr) for c in closure} == closure:
                out.append(tr)
    return out


def canonical(w, symmetries):
    """Least image of w under the letter symmetries and inversion.  Every
    measure in MEASURES is invariant under these."""
    return min(min(w.translate(t), invert(w).translate(t)) for t in symmetries)


@dataclass
class Budgets:
    max_word_len: int = 12
    max_states: int = 200_000
    max_cost: int = 32
    tree_cap: int = 20_000

    def search(self):
        return SearchBudget(self.max_word_len, self.max_states, self.max_cost)


@dataclass
class WordValue:
    value: int = None
    exact: bool = False
    witness: object = None


def _prefix_spread(w, ball):
    """max d_X between prefixes of w: a lower bound on IDiam and EDiam of
    every diagram for w."""
    best = 0
    for i in range(len(w) + 1):
        for j in range(i + 1, len(w) + 1):
            best = max(best, ball.metric(w[:i], w[:j]))
    return best


def word_measures(w, p, oracle, budgets=None, ball=None):
    """All measures of a single null-homotopic word.  Diagram measures are
    the minimum over diagrams built from the optimal Area and FL witnesses;
    they are exact when they meet a proven lower bound."""
    budgets = budgets or Budgets()
    out = {}
    area = reduced_area_search(w, p, budgets.search())
    out["area"] = WordValue(area.value, area.exact, area.witness)
    fl = fl_search(w, p, budgets.search())
    out["fl"] = WordValue(fl.value, fl.exact, fl.witness)
    ffl = ffl_search(w, p, budgets.search())
    out["ffl"] = WordValue(ffl.value, ffl.exact, ffl.witness)
    diagrams = []
    for res in (area, fl):
        if res.witness is not None:
            d = sequence_to_diagram(res.witness, p)
            if check(d, p):
                diagrams.append(d)
    if not diagrams:
        for m in ("idiam", "ediam", "gl", "dgl", "rad"):
            out[m] = WordValue()
        return out
    ms = [measure(d) for d in diagrams]
    need = max(2 * max(len(x) for x in d.vertex_words()) for d in diagrams)
    need = max(need, len(w))
    if ball is None or ball.radius < need:
        ball = cayley_ball(p, oracle, need)
    spread = _prefix_spread(w, ball)
    gl_low = 1 if w else 0
    rows = {}
    for d, m in zip(diagrams, ms):
        m = dict(m)
        m["ediam"] = ediam(d, ball)
        try:
            m["dgl"] = dgl(d, "exact", budgets.tree_cap).value
        except TooManyTrees:
            m["dgl"] = dgl(d, "heuristic").value
        rows[id(d)] = (d, m)
    low = {"idiam": spread, "ediam": spread, "gl": gl_low, "rad": 0, "dgl": spread + gl_low}
    for key in ("idiam", "ediam", "gl", "dgl", "rad"):
        d, m = min(rows.values(), key=lambda dm: dm[1][key])
        out[key] = WordValue(m[key], m[key] == low[key], d)
    return out


@dataclass
class FillingTable:
    presentation: object
    n_max: int
    values: dict = field(default_factory=dict)       # (n, measure) -> (value, exact, word)
    words: dict = field(default_factory=dict)        # word -> measures
    notes: list = field(default_factory=list)

    def value(self, n, m):
        return self.values[(n, m)][0]

    def exact(self, n, m):
        return self.values[(n, m)][1]

    def witness(self, n, m):
        """The word realising the cell and its word-level witness."""
        word = self.values[(n, m)][2]
        return word, self.words[word][m].witness if word is not None else None

    def rows(self):
        for n in range(self.n_max + 1):
            for m in MEASURES:
                v, e, word = self.values[(n, m)]
                yield {"n": n, "measure": m, "value": "" if v is None else v,
                       "exact": str(bool(e)).lower(), "witness": "." if word == "" else (word or "")}

    def to_csv(self):
        buf = io.StringIO()
        wr = csv.DictWriter(buf, ["n", "measure", "value", "exact", "witness"], lineterminator="\n")
        wr.writeheader()
        for row in self.rows():
            wr.writerow(row)
        return buf.getvalue()


def _one(args):
    w, p, oracle, budgets = args
    return word_measures(w, p, oracle, budgets)


def default_jobs():
    try:
        return max(1, int(os.environ.get("FILLINGS_JOBS", "1")))
    except ValueError:
        return 1


def filling_table(p, oracle, n_max, budgets=None, jobs=None, symmetric=True):
    budgets = budgets or Budgets()
    jobs = jobs or default_jobs()
    words = enumerate_null_words(p, oracle, n_max)
    table = FillingTable(p, n_max)
    table.notes.append("enumeration over freely reduced words")
    reps = {}
    if symmetric:
        syms = letter_symmetries(p)
        for w in words:
            reps.setdefault(canonical(w, syms), w)
    else:
        reps = {w: w for w in words}
    todo = sorted(set(reps.values()), key=lambda w: (len(w), w))
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_one, [(w, p, oracle, budgets) for w in todo]))
    else:
        results = [_one((w, p, oracle, budgets)) for w in todo]
    table.words = dict(zip(todo, results))
    for m in MEASURES:
        best, best_word, exact = 0, "", True
        by_len = sorted(todo, key=len)
        k = 0
        for n in range(n_max + 1):
            while k < len(by_len) and len(by_len[k]) <= n:
                wv = table.words[by_len[k]][m]
                if wv.value is None:
                    exact = False
                elif wv.value > best:
                    best, best_word = wv.value, by_len[k]
                k += 1
            cell_exact = exact and table.words[best_word][m].exact
            table.values[(n, m)] = (best, cell_exact, best_word)
    return table
