"""Shellings of diagrams: exact minimisation of the largest boundary along
a shelling, the tree-following upper bound, and conversion of a shelling
into a null-sequence."""

import heapq
from dataclasses import dataclass, field

from ..dps import ApplyRelator, FreeReduce, NullSequence
from ..words import invert
from .core import OUTER, DiagramError
from .measure import Graph, geodesic_spanning_tree, tree_pair


class TooManyCells(RuntimeError):
    pass


class InvalidShelling(DiagramError):
    pass


@dataclass(frozen=True)
class OneCellCollapse:
    edge: int
    vertex: int

    def __str__(self):
        return f"C1 e{self.edge} v{self.vertex}"


@dataclass(frozen=True)
class TwoCellCollapse:
    face: int
    edge: int

    def __str__(self):
        return f"C2 f{self.face} e{self.edge}"


@dataclass(frozen=True)
class OneCellExpand:
    """Cut along an edge at a boundary vertex.  Part of the move vocabulary
    but never produced by the searches here; replaying one is refused."""
    edge: int
    vertex: int
    copy: int = 0

    def __str__(self):
        return f"X1 e{self.edge} v{self.vertex} c{self.copy}"


@dataclass
class Shelling:
    moves: list = field(default_factory=list)

    def __len__(self):
        return len(self.moves)

    def __str__(self):
        return "\n".join(map(str, self.moves))


class Complex:
    """The subcomplex of a diagram still present during a shelling."""

    def __init__(self, d, track_circuit=False):
        self.d = d
        self.faces = set(range(1, len(d.faces)))
        self.edges = set(range(d.n_edges))
        self.degree = [0] * d.n_vertices
        for e in self.edges:
            u, v, _ = d.edge(e)
            self.degree[u] += 1
            self.degree[v] += 1
        self.length = len(d.circuit())
        self.circuit = list(d.circuit()) if track_circuit else None

    def open_side(self, h):
        """True when the face to the right of h is gone (or outer)."""
        f = self.d.face[h]
        return f == OUTER or f not in self.faces

    def free_half(self, e):
        """The half-edge of e facing outside, if exactly one side is open."""
        a, b = 2 * e, 2 * e + 1
        oa, ob = self.open_side(a), self.open_side(b)
        if oa and not ob:
            return a
        if ob and not oa:
            return b
        return None

    def spike_vertex(self, e):
        d = self.d
        if e not in self.edges or not (self.open_side(2 * e) and self.open_side(2 * e + 1)):
            return None
        u, v, _ = d.edge(e)
        if u == v:
            return None
        for x in (v, u):
            if x != d.star and self.degree[x] == 1:
                return x
        return None

    def legal(self, move):
        d = self.d
        if isinstance(move, OneCellCollapse):
            return self.spike_vertex(move.edge) == move.vertex
        if isinstance(move, TwoCellCollapse):
            if move.face not in self.faces or move.edge not in self.edges:
                return False
            h = self.free_half(move.edge)
            return h is not None and d.face[h ^ 1] == move.face
        return False

    def apply(self, move):
        """Apply a legal move; returns the matching null-sequence move when
        the circuit is tracked."""
        if not self.legal(move):
            raise InvalidShelling(f"illegal move {move}")
        d = self.d
        e = move.edge
        u, v, _ = d.edge(e)
        self.edges.discard(e)
        self.degree[u] -= 1
        self.degree[v] -= 1
        if isinstance(move, OneCellCollapse):
            self.length -= 2
            if self.circuit is None:
                return None
            h = 2 * e if d.orig[2 * e + 1] == move.vertex else 2 * e + 1
            pos = self.circuit.index(h)
            if self.circuit[pos + 1] != h ^ 1:
                raise InvalidShelling(f"spike {move} is not traversed consecutively")
            del self.circuit[pos:pos + 2]
            return FreeReduce(pos)
        h = self.free_half(e)
        self.faces.discard(move.face)
        k = d.face_length(move.face)
        self.length += k - 2
        if self.circuit is None:
            return None
        # the rest of the face, from the head of h round to its tail
        t = h ^ 1
        path = []
        g = d.nxt[t]
        while g != t:
            path.append(g)
            g = d.nxt[g]
        pos = self.circuit.index(h)
        self.circuit[pos:pos + 1] = path
        v_word = "".join(d.label[g] for g in path)
        return ApplyRelator(d.label[h] + invert(v_word), pos, 1)

    def spikes(self):
        out = []
        for e in sorted(self.edges):
            x = self.spike_vertex(e)
            if x is not None:
                out.append(OneCellCollapse(e, x))
        return out

    def done(self):
        return not self.edges and not self.faces


def eager_spikes(c):
    """Remove spikes until none are left; returns the moves."""
    moves = []
    while True:
        batch = c.spikes()
        if not batch:
            return moves
        for m in batch:
            if c.legal(m):
                c.apply(m)
                moves.append(m)


@dataclass
class ShellResult:
    value: int
    shelling: Shelling
    exact: bool
    mode: str
    bound: int = None
    states: int = 0

    def __str__(self):
        tag = "exact" if self.exact else "upper bound"
        return f"{self.value} ({tag}, {self.mode})"


def shelling_max(d, shelling):
    c = Complex(d)
    best = c.length
    for m in shelling.moves:
        c.apply(m)
        best = max(best, c.length)
    if not c.done():
        raise InvalidShelling("shelling does not reach the base vertex")
    return best


def shell_fl(d, mode="exact", max_faces=14, max_edges=60, pair=None):
    if mode == "exact":
        return _shell_exact(d, max_faces, max_edges)
    if mode == "upper":
        return _shell_by_trees(d, pair)
    raise ValueError(f"unknown shell_fl mode {mode!r}")


def _shell_exact(d, max_faces, max_edges):
    """Best-first search on (faces, edges) bitmasks keyed by the largest
    boundary length so far.  Only collapses are used; spikes are removed
    as soon as they appear, which never hurts (each one only adds 2 to
    every later boundary until it goes)."""
    if d.area > max_faces or d.n_edges > max_edges:
        raise TooManyCells(f"{d.area} faces / {d.n_edges} edges exceed the exact cap")
    face_len = [0] + [d.face_length(f) for f in range(1, len(d.faces))]
    ends = [d.edge(e)[:2] for e in range(d.n_edges)]
    sides = [d.sides(e) for e in range(d.n_edges)]
    star = d.star

    def gone(f, fm):
        return f == OUTER or not (fm >> f) & 1

    def strip(fm, em, length):
        moves = []
        while True:
            deg = [0] * d.n_vertices
            for e in range(d.n_edges):
                if (em >> e) & 1:
                    deg[ends[e][0]] += 1
                    deg[ends[e][1]] += 1
            found = False
            for e in range(d.n_edges):
                if not (em >> e) & 1:
                    continue
                a, b = sides[e]
                u, v = ends[e]
                if u == v or not (gone(a, fm) and gone(b, fm)):
                    continue
                x = v if v != star and deg[v] == 1 else (u if u != star and deg[u] == 1 else None)
                if x is None:
                    continue
                em &= ~(1 << e)
                length -= 2
                moves.append(OneCellCollapse(e, x))
                found = True
                break
            if not found:
                return em, length, moves

    fm0 = sum(1 << f for f in range(1, len(d.faces)))
    em0 = (1 << d.n_edges) - 1
    len0 = len(d.circuit())
    em0, l0, first = strip(fm0, em0, len0)
    start = (fm0, em0)
    parent = {start: (None, first)}
    best = {start: len0}
    lens = {start: l0}
    heap = [(len0, fm0, em0)]
    states = 0
    while heap:
        peak, fm, em = heapq.heappop(heap)
        if best.get((fm, em)) != peak:
            continue
        states += 1
        if fm == 0 and em == 0:
            return ShellResult(peak, Shelling(_unwind(parent, (fm, em))), True, "exact",
                               states=states)
        length = lens[(fm, em)]
        for e in range(d.n_edges):
            if not (em >> e) & 1:
                continue
            a, b = sides[e]
            for f, other in ((a, b), (b, a)):
                if f == OUTER or gone(f, fm) or f == other or not gone(other, fm):
                    continue
                nf, ne = fm & ~(1 << f), em & ~(1 << e)
                nl = length + face_len[f] - 2
                npeak = max(peak, nl)
                ne, nl, tail = strip(nf, ne, nl)
                key = (nf, ne)
                if key not in best or npeak < best[key]:
                    best[key] = npeak
                    lens[key] = nl
                    parent[key] = ((fm, em), [TwoCellCollapse(f, e)] + tail)
                    heapq.heappush(heap, (npeak, nf, ne))
    raise InvalidShelling("no shelling found; the diagram is not contractible")


def _unwind(parent, key):
    chunks = []
    while key is not None:
        prev, moves = parent[key]
        chunks.append(moves)
        key = prev
    return [m for chunk in reversed(chunks) for m in chunk]


def tree_following_bound(d, pair):
    lam = max((d.face_length(f) for f in range(1, len(d.faces))), default=0)
    dt, ds = pair.diameters(d)
    return dt + 2 * lam * ds + len(d.circuit())


def _shell_by_trees(d, pair=None):
    """Follow a dual pair of spanning trees: walk round T from the base
    vertex and, for every face met, collapse the chain of faces leading to
    it from the outer face along T*.  A face is always collapsed across the
    T*-edge to its parent, which by then lies on the boundary."""
    if pair is None:
        pair = tree_pair(d, geodesic_spanning_tree(d, d.star))
    dual = d.dual()
    tstar = Graph(dual.n, [dual.edges[e] for e in pair.dual_tree])
    parent = {OUTER: None}
    order = [OUTER]
    adj = tstar.adjacency()
    for f in order:
        for g, i in adj[f]:
            if g not in parent:
                parent[g] = (f, pair.dual_tree[i])
                order.append(g)
    targets = []
    seen = set()
    for v in _tree_walk(d, pair.tree):
        for h in d.rotation(v):
            f = d.face[h]
            if f != OUTER and f not in seen:
                seen.add(f)
                targets.append(f)
    for f in order[1:]:
        if f not in seen:
            targets.append(f)
    c = Complex(d)
    moves = eager_spikes(c)
    peak = len(d.circuit())
    for f in targets:
        chain = []
        while f != OUTER and f in c.faces:
            chain.append(f)
            f = parent[f][0]
        for g in reversed(chain):
            c.apply(TwoCellCollapse(g, parent[g][1]))
            moves.append(TwoCellCollapse(g, parent[g][1]))
            peak = max(peak, c.length)
            moves += eager_spikes(c)
    moves += eager_spikes(c)
    if not c.done():
        raise InvalidShelling("tree-following shelling did not finish")
    return ShellResult(peak, Shelling(moves), False, "upper", tree_following_bound(d, pair))


def _tree_walk(d, tree):
    """Vertices in the order a walk round the tree from the base meets them."""
    chosen = set(tree)
    out, seen = [], set()

    def visit(v, came):
        stack = [(v, came)]
        while stack:
            v, came = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            out.append(v)
            rot = [h for h in d.rotation(v) if h // 2 in chosen]
            if came is not None and came in rot:
                i = rot.index(came)
                rot = rot[i + 1:] + rot[:i]
            for h in reversed(rot):
                stack.append((d.target(h), h ^ 1))

    visit(d.star, None)
    return out


def diagram_to_sequence(d, shelling):
    c = Complex(d, track_circuit=True)
    moves = []
    for m in shelling.moves:
        if isinstance(m, OneCellExpand):
            raise InvalidShelling("1-cell expansions are not supported")
        moves.append(c.apply(m))
    if not c.done():
        raise InvalidShelling("shelling does not reach the base vertex")
    from .core import boundary_word
    return NullSequence(boundary_word(d), moves)
