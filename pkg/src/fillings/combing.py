"""Combings: normal forms for the elements of a Cayley ball, fellow
travelling constants, length functions, BS(1,2) rewriting, and cockleshell
diagrams built from combing lines and ladders of rungs."""

import re
from dataclasses import dataclass, field

from .diagram import sequence_to_diagram
from .dps import (ApplyRelator, FreeExpand, ImplicitPresentation, NullSequence,
                  ShortNullWords, reduce_moves, replay)
from .errors import BallTooSmall, NotNullHomotopic
from .words import exponent_sums, free_reduce, invert

# BS(1,2) = <a, b | b^-1 a b = a^2>
_BS12_RULES = [("aaB", "Ba"), ("ab", "baa"), ("Ab", "bAA"), ("AB", "aBA"),
               ("aA", ""), ("Aa", ""), ("bB", ""), ("Bb", "")]

_BS12_LANGUAGE = re.compile(r"^(b*|B*)(aB(aB|B)*)?(a*|A*)$")


def bs12_normal_form(w):
    """Rewrite leftmost first (longest left-hand side at a position) until
    no rule applies."""
    while True:
        for i in range(len(w)):
            for lhs, rhs in _BS12_RULES:
                if w.startswith(lhs, i):
                    w = w[:i] + rhs + w[i + len(lhs):]
                    break
            else:
                continue
            break
        else:
            return w


def in_bs12_language(w):
    """b^r u a^s with u over {ab^-1, b^-1} not starting with b^-1."""
    return bool(_BS12_LANGUAGE.match(w))


@dataclass
class Combing:
    ball: object
    kind: str
    normal_form: dict = field(default_factory=dict)     # ball index -> word

    def sigma(self, w):
        i = self.ball.find(w)
        if i is None:
            raise BallTooSmall(f"{w!r} lies outside the combed ball")
        return self.normal_form[i]


def _zm_form(w, gens):
    sums = exponent_sums(w, gens)
    return "".join((g if s > 0 else g.upper()) * abs(s) for g, s in zip(gens.generators, sums))


def standard_combing(kind, ball):
    """kind: 'free' (reduced words), 'zm' (exponent-collected words),
    'finite-ball' (least geodesics), 'bs12' (rewriting normal forms)."""
    alphabet = ball.presentation.alphabet
    c = Combing(ball, kind)
    for i, g in enumerate(ball.vertices):
        if kind in ("free", "finite-ball"):
            s = g
        elif kind == "zm":
            s = _zm_form(g, alphabet)
        elif kind == "bs12":
            s = bs12_normal_form(g)
        else:
            raise ValueError(f"unknown combing {kind!r}")
        if not ball.oracle.equal(s, g):
            raise ValueError(f"normal form {s!r} does not represent {g!r}")
        c.normal_form[i] = s
    return c


class _Metric:
    def __init__(self, ball):
        self.ball = ball
        self.memo = {}

    def __call__(self, u, v):
        key = (u, v)
        d = self.memo.get(key)
        if d is None:
            d = self.ball.metric(u, v)
            self.memo[key] = d
        return d


def _sync(p, q, dist):
    n = max(len(p), len(q))
    return max(dist(p[:t], q[:t]) for t in range(n + 1))


def _async(p, q, dist):
    """Least k over monotone reparametrisations: bottleneck path through the
    (|p|+1) x (|q|+1) grid with steps (1,0), (0,1), (1,1)."""
    m, n = len(p), len(q)
    best = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        for j in range(n + 1):
            here = dist(p[:i], q[:j])
            if i == 0 and j == 0:
                best[i][j] = here
                continue
            prev = []
            if i:
                prev.append(best[i - 1][j])
            if j:
                prev.append(best[i][j - 1])
            if i and j:
                prev.append(best[i - 1][j - 1])
            best[i][j] = max(here, min(prev))
    return best[m][n]


def fellow_traveler_check(c, ball=None, metric_ball=None):
    """Fellow travelling constants over adjacent pairs of the combed ball.
    Distances are measured in metric_ball (default: the combed ball)."""
    ball = ball or c.ball
    dist = _Metric(metric_ball or ball)
    sync = asyn = 0
    for i, _, j in ball.edges:
        if i >= j:
            continue
        p, q = c.normal_form[i], c.normal_form[j]
        sync = max(sync, _sync(p, q, dist))
        asyn = max(asyn, _async(p, q, dist))
    return {"syncK": sync, "asyncK": asyn}


def length_function(c, n):
    if n > c.ball.radius:
        raise BallTooSmall(f"need a ball of radius {n}, have {c.ball.radius}")
    return max(len(c.normal_form[i]) for i, d in enumerate(c.ball.distances) if d <= n)


def ladder_presentation(p, oracle, k):
    """All null-homotopic words of length at most 2k+2."""
    return ImplicitPresentation(p.alphabet, ShortNullWords(oracle, 2 * k + 2),
                                f"null words of length <= {2 * k + 2}")


def _free_path(u, v, pos):
    """Free moves turning u into v (freely equal) at position pos."""
    ru, down = reduce_moves(u)
    rv, up = reduce_moves(v)
    if ru != rv:
        raise ValueError("words are not freely equal")
    moves = [type(m)(m.pos + pos) for m in down]
    words = [v]
    for m in up:
        words.append(m.apply(words[-1]))
    for m, before in zip(reversed(up), reversed(words[:-1])):
        moves.append(FreeExpand(m.pos + pos, before[m.pos]))
    return moves


def cockleshell_sequence(w, c, ball=None):
    """A null-sequence for w whose relator moves are the ladder cells
    between consecutive combing lines.  Returns (sequence, k) where k is
    the longest rung used."""
    ball = ball or c.ball
    oracle = ball.oracle
    if not oracle.decide(w):
        raise NotNullHomotopic(f"{w!r} is not null-homotopic")
    lines = [c.sigma(w[:i]) for i in range(len(w) + 1)]
    moves, k = [], 0
    word = w
    for i, x in enumerate(w):
        p, q = lines[i], lines[i + 1]
        big_t = max(len(p), len(q))
        rungs = [ball.canonical(invert(p[:t]) + q[:t]) for t in range(big_t + 1)]
        k = max(k, max(map(len, rungs)))
        rest = word[len(p) + 1:]
        if rungs[big_t] != x:
            moves.append(ApplyRelator(x + invert(rungs[big_t]), len(p), 1))
        word = p + rungs[big_t] + rest
        for t in range(big_t - 1, -1, -1):
            pl, ql = p[t:t + 1], q[t:t + 1]
            u, v = pl + rungs[t + 1], rungs[t] + ql
            if u != v:
                cell = u + invert(v)
                if free_reduce(cell) == "":
                    moves += _free_path(u, v, t)
                else:
                    moves.append(ApplyRelator(cell, t, len(u)))
            word = p[:t] + rungs[t] + q[t:] + rest
        if word != q + rest:
            raise AssertionError("ladder bookkeeping went wrong")
    return NullSequence(w, moves), k


def cockleshell(w, c, ball=None):
    """The cockleshell diagram for w over the ladder presentation."""
    ns, k = cockleshell_sequence(w, c, ball)
    p = ladder_presentation(c.ball.presentation, c.ball.oracle, k)
    r = replay(ns, p)
    if not r.null:
        raise AssertionError(f"cockleshell sequence does not replay: {r.error}")
    d = sequence_to_diagram(ns, p)
    d.ladder = p
    return d


def cockleshell_bound(w, c):
    return 2 * len(w) * length_function(c, len(w) // 2)
