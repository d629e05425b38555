"""The Dehn proof system: moves on words, null-sequences, replay, and exact
searches for Area, FL and FFL of a single word."""

from collections import OrderedDict, deque
from dataclasses import dataclass
from fractions import Fraction
import heapq
import math

from .errors import IllegalMove
from .words import free_reduce, invert


@dataclass(frozen=True)
class FreeReduce:
    pos: int

    def apply(self, w, closure=None):
        p = self.pos
        if not (0 <= p < len(w) - 1) or w[p] != w[p + 1].swapcase():
            raise IllegalMove(f"no cancelling pair at {p} in {w!r}")
        return w[:p] + w[p + 2:]

    def __str__(self):
        return f"FR @{self.pos}"


@dataclass(frozen=True)
class FreeExpand:
    pos: int
    letter: str

    def apply(self, w, closure=None):
        p = self.pos
        if not (0 <= p <= len(w)) or len(self.letter) != 1:
            raise IllegalMove(f"bad expansion {self} on {w!r}")
        return w[:p] + self.letter + self.letter.swapcase() + w[p:]

    def __str__(self):
        return f"FE {self.letter} @{self.pos}"


@dataclass(frozen=True)
class ApplyRelator:
    """Replace u by v at pos, where word = u v^-1 is in the relator closure
    and u = word[:cut].  The default cut deletes a whole closure word."""
    word: str
    pos: int
    cut: int = None

    def __post_init__(self):
        if self.cut is None:
            object.__setattr__(self, "cut", len(self.word))

    @property
    def u(self):
        return self.word[:self.cut]

    @property
    def v(self):
        return invert(self.word[self.cut:])

    def apply(self, w, closure=None):
        if closure is not None and self.word not in closure:
            raise IllegalMove(f"{self.word!r} is not in the relator closure")
        if not 0 <= self.cut <= len(self.word):
            raise IllegalMove(f"cut {self.cut} out of range for {self.word!r}")
        p, u = self.pos, self.u
        if not 0 <= p <= len(w) or w[p:p + len(u)] != u:
            raise IllegalMove(f"{u!r} does not occur at {p} in {w!r}")
        return w[:p] + self.v + w[p + len(u):]

    def __str__(self):
        if self.cut == len(self.word):
            return f"R {self.word} @{self.pos}"
        return f"R {self.word[:self.cut]}|{self.word[self.cut:]} @{self.pos}"


@dataclass(frozen=True)
class CyclicShift:
    offset: int

    def apply(self, w, closure=None):
        if not w:
            if self.offset:
                raise IllegalMove("cannot shift the empty word")
            return w
        if not 0 <= self.offset < len(w):
            raise IllegalMove(f"shift {self.offset} out of range for {w!r}")
        return w[self.offset:] + w[:self.offset]

    def __str__(self):
        return f"CS {self.offset}"


def parse_move(line):
    parts = line.split()
    try:
        if parts[0] == "FR" and len(parts) == 2:
            return FreeReduce(_at(parts[1]))
        if parts[0] == "FE" and len(parts) == 3:
            return FreeExpand(_at(parts[2]), parts[1])
        if parts[0] == "R" and len(parts) == 3:
            text = parts[1]
            if "|" in text:
                cut = text.index("|")
                return ApplyRelator(text.replace("|", ""), _at(parts[2]), cut)
            return ApplyRelator(text, _at(parts[2]))
        if parts[0] == "CS" and len(parts) == 2:
            return CyclicShift(int(parts[1]))
    except (ValueError, IndexError):
        pass
    raise ValueError(f"cannot parse move {line!r}")


def _at(tok):
    if not tok.startswith("@"):
        raise ValueError(tok)
    return int(tok[1:])


@dataclass
class NullSequence:
    start: str
    moves: list

    def dumps(self):
        lines = [f"start {self.start or '.'}"]
        lines += [str(m) for m in self.moves]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        start, moves = None, []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("start"):
                start = line[5:].strip()
                start = "" if start == "." else start
            else:
                moves.append(parse_move(line))
        if start is None:
            raise ValueError("missing start line")
        return cls(start, moves)

    def relator_count(self):
        return sum(isinstance(m, ApplyRelator) for m in self.moves)


@dataclass
class Replay:
    words: list
    relator_count: int
    max_len: int
    valid: bool
    bad_move: int = None
    error: str = None

    @property
    def null(self):
        return self.valid and self.words[-1] == ""

    @property
    def stats(self):
        return {"relatorCount": self.relator_count, "maxLen": self.max_len}


def replay(ns, p, allow_shift=False):
    """Replay moves from ns.start.  Never raises; an illegal move stops the
    replay and is reported by index."""
    closure = p.closure
    w = ns.start
    words = [w]
    count = 0
    for i, m in enumerate(ns.moves):
        try:
            if isinstance(m, CyclicShift) and not allow_shift:
                raise IllegalMove("cyclic shifts are only allowed in free mode")
            w = m.apply(w, closure)
        except IllegalMove as e:
            return Replay(words, count, max(map(len, words)), False, i, str(e))
        words.append(w)
        if isinstance(m, ApplyRelator):
            count += 1
    return Replay(words, count, max(map(len, words)), True)


def edge_form(ns):
    """Rewrite every relator move so that it replaces exactly one letter,
    inserting free moves as needed.  The start word, final word and relator
    count are unchanged."""
    out = []
    for m in ns.moves:
        if not isinstance(m, ApplyRelator) or m.cut == 1:
            out.append(m)
        elif m.cut == 0:
            v = m.v
            out.append(FreeExpand(m.pos, v[0]))
            # replace the inverse of v[0] by the rest of v
            out.append(ApplyRelator(invert(v[1:] + v[0]), m.pos + 1, 1))
        else:
            c, k = m.word, m.cut
            rest = len(m.v)
            out.append(ApplyRelator(c, m.pos, 1))
            mid = m.pos + rest + k - 2
            for j in range(k - 1):
                out.append(FreeReduce(mid - j))
    return NullSequence(ns.start, out)


# -- neighbour generation -------------------------------------------------

def free_reductions(w):
    for i in range(len(w) - 1):
        if w[i] == w[i + 1].swapcase():
            yield FreeReduce(i), w[:i] + w[i + 2:]


def free_expansions(w, letters):
    seen = set()
    for i in range(len(w) + 1):
        for x in letters:
            nw = w[:i] + x + x.swapcase() + w[i:]
            if nw not in seen:
                seen.add(nw)
                yield FreeExpand(i, x), nw


def relator_applications(w, closure_words, max_len, cuts="any"):
    """All ApplyRelator moves on w giving words of length <= max_len.
    cuts="any" allows every prefix u (including empty and whole);
    cuts="edge" only replaces single letters, matching a 2-cell collapse
    through one boundary edge."""
    n = len(w)
    for c in closure_words:
        lc = len(c)
        ks = range(lc + 1) if cuts == "any" else (1,)
        for k in ks:
            new_len = n + lc - 2 * k
            if new_len > max_len:
                continue
            u = c[:k]
            v = invert(c[k:])
            if k == 0:
                for i in range(n + 1):
                    yield ApplyRelator(c, i, 0), w[:i] + v + w[i:]
                continue
            i = w.find(u)
            while i >= 0:
                yield ApplyRelator(c, i, k), w[:i] + v + w[i + k:]
                i = w.find(u, i + 1)


class _Node:
    __slots__ = ("word", "parent", "move")

    def __init__(self, word, parent, move):
        self.word = word
        self.parent = parent
        self.move = move

    def path(self):
        moves = []
        node = self
        while node.parent is not None:
            moves.append(node.move)
            node = node.parent
        moves.reverse()
        return node.word, moves


@dataclass
class SearchBudget:
    max_word_len: int = 12
    max_states: int = 2_000_000
    max_cost: int = 64

    def __post_init__(self):
        if min(self.max_word_len, self.max_states, self.max_cost) <= 0:
            raise ValueError("budget values must be positive")


@dataclass
class SearchResult:
    value: int = None
    witness: NullSequence = None
    exact: bool = False
    cap: int = None
    states: int = 0
    note: str = ""

    @property
    def unknown(self):
        return self.value is None

    def __str__(self):
        if self.value is None:
            return "Unknown"
        return f"{self.value} ({'exact' if self.exact else 'upper bound'})"


class _Table:
    """Best-cost table capped at max_states with LRU eviction."""

    def __init__(self, max_states):
        self.max_states = max_states
        self.data = OrderedDict()
        self.evicted = False

    def get(self, key):
        v = self.data.get(key)
        if v is not None:
            self.data.move_to_end(key)
        return v

    def put(self, key, value):
        self.data[key] = value
        self.data.move_to_end(key)
        if len(self.data) > self.max_states:
            self.data.popitem(last=False)
            self.evicted = True

    def __len__(self):
        return len(self.data)


def area_search(w, p, budget=None, cuts="any"):
    """Exact Area(w): 0/1 shortest path over exact words of length at most
    budget.max_word_len, free moves cost 0 and relator moves cost 1.

    A relator move changes the freely reduced form by at most B letters, so
    cost + ceil(len(reduced)/B) is a lower bound used to prune once a
    null-sequence is known."""
    budget = budget or SearchBudget()
    cap = max(budget.max_word_len, len(w))
    closure = sorted(p.closure)
    letters = p.alphabet.letters
    big_b = max((len(c) for c in closure), default=1)
    table = _Table(budget.max_states)
    dq = _Levels()
    dq.append((0, _Node(w, None, None)))
    table.put(w, 0)
    expanded = 0
    best, best_node = budget.max_cost + 1, None
    bounds = {}
    tripped = False

    def lower(word):
        r = bounds.get(word)
        if r is None:
            r = -(-len(free_reduce(word)) // big_b)
            bounds[word] = r
        return r

    while dq:
        cost, node = dq.popleft()
        word = node.word
        if cost >= best:
            break
        seen = table.get(word)
        if seen is not None and seen < cost:
            continue
        if word == "":
            best, best_node = cost, node
            break
        if cost + lower(word) >= best:
            continue
        if expanded >= budget.max_states:
            tripped = True
            break
        expanded += 1
        for move, nw in free_reductions(word):
            if nw == "":
                best, best_node = cost, _Node(nw, node, move)
                break
            _relax(table, dq, node, move, nw, cost, False)
        if best == cost:
            break
        if len(word) + 2 <= cap:
            for move, nw in free_expansions(word, letters):
                _relax(table, dq, node, move, nw, cost, False)
        if cost + 1 < best:
            for move, nw in relator_applications(word, closure, cap, cuts):
                if nw == "":
                    best, best_node = cost + 1, _Node(nw, node, move)
                    continue
                if cost + 1 + lower(nw) < best:
                    _relax(table, dq, node, move, nw, cost + 1, True)
    if best_node is None:
        return SearchResult(None, None, False, cap, expanded,
                            "budget exhausted" if table.evicted or tripped
                            else "no null-sequence within the length cap")
    start, moves = best_node.path()
    return SearchResult(best, NullSequence(start, moves), not (table.evicted or tripped),
                        cap, expanded)


def reduce_moves(w):
    """Free reduction of w together with the FR moves performing it."""
    stack, moves = [], []
    for c in w:
        if stack and stack[-1] == c.swapcase():
            moves.append(FreeReduce(len(stack) - 1))
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack), moves


def reduced_area_search(w, p, budget=None):
    """Area(w) by breadth-first search over freely reduced words, each step
    an edge relator move followed by free reduction.

    Exact: in a minimal diagram for a reduced word some face has a boundary
    edge; collapsing it is an edge move, and free reduction never raises
    area.  Reduced words longer than budget.max_word_len are not visited."""
    budget = budget or SearchBudget()
    start, head = reduce_moves(w)
    cap = max(budget.max_word_len, len(start))
    closure = sorted(p.closure)
    big_b = max((len(c) for c in closure), default=2)
    root = _Node(start, None, tuple(head))
    if start == "":
        return SearchResult(0, NullSequence(w, list(head)), True, cap, 0)
    seen = {start}
    level, cost, states = [root], 0, 0
    capped = False
    while level and cost < budget.max_cost:
        cost += 1
        nxt = []
        for node in level:
            states += 1
            for move, nw in relator_applications(node.word, closure, cap + big_b, "edge"):
                red, frs = reduce_moves(nw)
                if len(red) > cap:
                    capped = True
                    continue
                if red in seen:
                    continue
                child = _Node(red, node, (move,) + tuple(frs))
                if red == "":
                    start_word, chunks = child.path()
                    moves = [m for chunk in [root.move] + chunks for m in chunk]
                    return SearchResult(cost, NullSequence(w, moves), True, cap, states)
                seen.add(red)
                nxt.append(child)
            if len(seen) > budget.max_states:
                return SearchResult(None, None, False, cap, states, "budget exhausted")
        level = nxt
    note = "no null-sequence within the length cap" if capped or not level else "cost cap reached"
    return SearchResult(None, None, False, cap, states, note)


class _Levels:
    """Queue for 0/1 costs: FIFO inside each cost level, so that free moves
    are explored breadth first and witnesses stay short."""

    def __init__(self):
        self.levels = {}
        self.low = 0

    def append(self, item):
        self.levels.setdefault(item[0], deque()).append(item)

    def popleft(self):
        while not self.levels.get(self.low):
            self.levels.pop(self.low, None)
            self.low += 1
        return self.levels[self.low].popleft()

    def __bool__(self):
        return any(self.levels.values())


def _relax(table, dq, node, move, nw, cost, back):
    old = table.get(nw)
    if old is not None and old <= cost:
        return
    table.put(nw, cost)
    dq.append((cost, _Node(nw, node, move)))


def reachable(w, p, limit, max_states, cuts="edge", shifts=False):
    """Search for a null-sequence from w through words of length <= limit.
    Returns (node or None, complete) where complete means the whole
    length-limited component was explored.  Shorter words are expanded
    first so successful probes usually finish quickly."""
    if len(w) > limit:
        return None, True
    closure = sorted(p.closure)
    letters = p.alphabet.letters
    root = _Node(w, None, None)
    if w == "":
        return root, True
    seen = {w}
    heap = [(len(w), 0, root)]
    tick = 1
    while heap:
        _, _, node = heapq.heappop(heap)
        word = node.word
        children = list(free_reductions(word))
        if len(word) + 2 <= limit:
            children += free_expansions(word, letters)
        children += relator_applications(word, closure, limit, cuts)
        if shifts:
            children += [(CyclicShift(k), word[k:] + word[:k]) for k in range(1, len(word))]
        for move, nw in children:
            if nw in seen:
                continue
            child = _Node(nw, node, move)
            if nw == "":
                return child, True
            if len(seen) >= max_states:
                return None, False
            seen.add(nw)
            heapq.heappush(heap, (len(nw), tick, child))
            tick += 1
    return None, True


def fl_search(w, p, budget=None, cuts="edge", shifts=False):
    """Minimal L such that w reaches the empty word through words of
    length <= L, found by binary search over L.  cuts="edge" restricts
    relator moves to single-letter replacements, the moves a shelling of a
    van Kampen diagram produces; cuts="any" allows every split u v^-1."""
    budget = budget or SearchBudget()
    lo = len(w)
    hi = max(budget.max_word_len, lo)
    if w == "":
        return SearchResult(0, NullSequence("", []), True, hi, 0)
    node, complete = reachable(w, p, hi, budget.max_states, cuts, shifts)
    if node is None:
        note = "no null-sequence within the length cap" if complete else "budget exhausted"
        return SearchResult(None, None, False, hi, budget.max_states, note)
    best = node
    proven_fail = lo - 1
    exact = True
    while lo < hi:
        mid = (lo + hi) // 2
        node, complete = reachable(w, p, mid, budget.max_states, cuts, shifts)
        if node is not None:
            best, hi = node, _max_len(node)
        else:
            if complete:
                proven_fail = mid
            else:
                exact = False
            lo = mid + 1
    start, moves = best.path()
    ns = NullSequence(start, moves)
    value = _max_len(best)
    exact = exact and proven_fail == value - 1
    return SearchResult(value, ns, exact, budget.max_word_len)


def ffl_search(w, p, budget=None, cuts="edge"):
    """As fl_search, with cyclic shifts of the word allowed for free."""
    return fl_search(w, p, budget, cuts, shifts=True)


def _max_len(node):
    m = 0
    while node is not None:
        m = max(m, len(node.word))
        node = node.parent
    return m


# -- coarse fillings ------------------------------------------------------

class ShortNullWords:
    """Membership test for the relator set "all null-homotopic words of
    length <= bound", decided by an oracle."""

    def __init__(self, oracle, bound):
        self.oracle = oracle
        self.bound = bound

    def __contains__(self, word):
        if len(word) > self.bound:
            return False
        return self.oracle.decide(word)


class ImplicitPresentation:
    """A presentation whose relator closure is only given as a membership
    test, e.g. ShortNullWords.  Enough for replay and diagram checks."""

    def __init__(self, alphabet, closure, name=None):
        self.alphabet = alphabet
        self.closure = closure
        self.name = name

    @property
    def generators(self):
        return self.alphabet.generators


def coarse_fill(w, p, oracle, lam, extra, k_max, budget=None):
    """Minimal number of pieces needed to fill w when any null word of
    length <= lam*len(w) + extra counts as a single piece.

    This is Area over the presentation whose relators are all such short
    null words.  A minimal diagram always has a face on a boundary edge,
    so it is enough to search freely reduced words under the move
    "replace one letter x by a word v equal to x with 1 + len(v) <= bound",
    followed by free reduction.  Returns a SearchResult whose value is None
    when the minimum exceeds k_max (note "infeasible") or the budget trips."""
    budget = budget or SearchBudget()
    bound = math.floor(Fraction(lam) * len(w) + extra)
    letters = p.alphabet.letters
    replacements = _short_equal_words(letters, oracle, bound - 1)
    cap = max(budget.max_word_len, len(w))

    start = w
    root = _Node(w, None, None)
    node = root
    # free-reduce first, cost 0
    cur = w
    while True:
        step = next(free_reductions(cur), None)
        if step is None:
            break
        node = _Node(step[1], node, step[0])
        cur = step[1]
    if cur == "":
        return SearchResult(0, NullSequence(start, node.path()[1]), True, cap, 0)
    frontier = [node]
    seen = {cur}
    for cost in range(1, k_max + 1):
        nxt = []
        for node in frontier:
            word = node.word
            for i, x in enumerate(word):
                for v in replacements[x]:
                    if len(word) - 1 + len(v) > cap:
                        continue
                    move = ApplyRelator(x + invert(v), i, 1)
                    child = _Node(word[:i] + v + word[i + 1:], node, move)
                    child = _reduce_chain(child)
                    if child.word == "":
                        return SearchResult(cost, NullSequence(start, child.path()[1]),
                                            True, cap, len(seen))
                    if child.word in seen:
                        continue
                    if len(seen) >= budget.max_states:
                        return SearchResult(None, None, False, cap, len(seen), "budget exhausted")
                    seen.add(child.word)
                    nxt.append(child)
        frontier = nxt
        if not frontier:
            break
    return SearchResult(None, None, True, cap, len(seen), "infeasible")


def _reduce_chain(node):
    word = node.word
    while True:
        step = next(free_reductions(word), None)
        if step is None:
            return node
        node = _Node(step[1], node, step[0])
        word = step[1]


def _short_equal_words(letters, oracle, max_len):
    """For each letter x, the freely reduced words of length <= max_len
    equal to x in the group."""
    out = {x: [] for x in letters}
    if max_len < 0:
        return out
    words = [""]
    layer = [""]
    for _ in range(max_len):
        layer = [u + x for u in layer for x in letters if not u or u[-1] != x.swapcase()]
        words += layer
    for x in letters:
        for v in words:
            if v != x and oracle.decide(x + invert(v)):
                out[x].append(v)
    return out
