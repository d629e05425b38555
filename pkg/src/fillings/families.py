"""Diagram families that separate the filling invariants: the dyadic arc
graphs Gamma_n, the ternary trees T_n, and fattened trees with a skirt."""

import random
from dataclasses import dataclass, field

from .diagram import (OUTER, Graph, dgl, from_angles, from_faces, grid, measure, shell_fl,
                      tree_pair)
from .diagram.measure import _is_spanning_tree, _pair_cost


# -- Gamma_n -------------------------------------------------------------------

def gamma_n(n):
    """Vertices 0..2^n on a line joined by a path, plus one arc over every
    dyadic interval [k 2^j, (k+1) 2^j] with j >= 1.  Arcs of odd level are
    drawn above the line and arcs of even level below it, nested by length."""
    if n < 1:
        raise ValueError("n >= 1")
    size = 2 ** n
    edges = [(i, i + 1, "a") for i in range(size)]
    level = {}
    for j in range(1, n + 1):
        for k in range(0, size, 2 ** j):
            level[len(edges)] = j
            edges.append((k, k + 2 ** j, "b"))

    def angle(h):
        u, v, _ = edges[h // 2]
        if h % 2:
            u, v = v, u
        span = abs(v - u)
        if span == 1:
            return 0.0 if v > u else 180.0
        a = 90 * (1 - 1 / (span + 1)) if v > u else 90 + 90 / (span + 1)
        return a if level[h // 2] % 2 else 360 - a

    # the outer face meets vertex 0 in the sector facing left
    out = [h for h in range(2 * len(edges)) if edges[h // 2][h % 2] == 0]
    below = [h for h in out if angle(h) >= 180]
    base = min(below or out, key=angle)
    return from_angles(size + 1, edges, angle, star=0, base=base)


@dataclass
class GammaReport:
    n: int
    diam_gamma: int
    diam_dual: int
    diam_t: int
    diam_tstar: int
    tstar_geodesic: bool
    best_tree: list
    diam_s: int
    diam_sstar: int


def horizontal_tree(d):
    return [e for e in range(d.n_edges) if d.label[2 * e] == "a"]


def _geodesic_from(graph, sub, root):
    return graph.bfs(root) == Graph(graph.n, sub).bfs(root)


def gamma_report(n, exact_limit=3):
    d = gamma_n(n)
    skel, dual = d.skeleton(), d.dual()
    pair = tree_pair(d, horizontal_tree(d))
    dt, ds = pair.diameters(d)
    geodesic = _geodesic_from(dual, [dual.edges[e] for e in pair.dual_tree], OUTER)
    if n <= exact_limit:
        best = dgl(d, "exact").pair
    else:
        best = search_tree_pair(d)
    s, sstar = best.diameters(d)
    return GammaReport(n, skel.diameter(), dual.diameter(), dt, ds, geodesic,
                       list(best.tree), s, sstar)


def search_tree_pair(d, restarts=30, steps=400, seed=0):
    """Random-restart local search for a spanning tree with small
    Diam(T) + Diam(T*); swaps that do not increase the cost are kept."""
    rng = random.Random(seed)
    skel, dual = d.skeleton(), d.dual()
    best = None
    for _ in range(restarts):
        tree = tree_pairs_sample(d, 1, seed=rng.randrange(1 << 30))[0].tree
        cost, _ = _pair_cost(d, tree, skel, dual)
        for _ in range(steps):
            e = rng.randrange(d.n_edges)
            if e in tree:
                continue
            cand = sorted(set(tree) - {rng.choice(tree)} | {e})
            if not _is_spanning_tree(d.n_vertices, skel.edges, cand):
                continue
            c2, _ = _pair_cost(d, cand, skel, dual)
            if c2 <= cost:
                tree, cost = cand, c2
        if best is None or cost < best[0]:
            best = (cost, tree)
    return tree_pair(d, best[1])


# -- ternary trees ------------------------------------------------------------

@dataclass
class TernaryTree:
    n: int
    n_vertices: int
    edges: list
    root: int                 # the leaf used for gluing at the next level
    leaves: list = field(default_factory=list)

    @property
    def graph(self):
        return Graph(self.n_vertices, self.edges)


def ternary_tree(n):
    """T_1 is an edge; T_n glues three copies of T_(n-1) at their root
    leaves, and the new root is the last leaf of the first copy."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return TernaryTree(1, 2, [(0, 1)], 0, [0, 1])
    sub = ternary_tree(n - 1)
    edges, leaves = [], []
    hub = 0
    count = 1
    for _ in range(3):
        remap = {}
        for v in range(sub.n_vertices):
            if v == sub.root:
                remap[v] = hub
            else:
                remap[v] = count
                count += 1
        edges += [(remap[a], remap[b]) for a, b in sub.edges]
        leaves += [remap[v] for v in sub.leaves if v != sub.root]
    return TernaryTree(n, count, edges, leaves[0 if n == 2 else len(leaves) // 3 - 1], leaves)


def sweep_width(tree):
    """Least, over all orders in which a sweep can pass the vertices, of the
    largest number of edges met at one time.  When the front passes vertex
    v it meets every edge at v together with every edge already cut by the
    front.  Exact dynamic programming over swept vertex sets."""
    nv = tree.n_vertices
    if nv > 22:
        raise ValueError("sweep check is exhaustive; tree too large")
    adj = [0] * nv
    for a, b in tree.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    edges = tree.edges

    def cut(mask):
        return sum(((mask >> a) & 1) != ((mask >> b) & 1) for a, b in edges)

    best = {0: 0}
    for size in range(nv):
        nxt = {}
        for mask, val in best.items():
            c = cut(mask)
            for v in range(nv):
                if mask >> v & 1:
                    continue
                inside = bin(adj[v] & mask).count("1")
                met = c - inside + bin(adj[v]).count("1")
                m2 = mask | 1 << v
                cand = max(val, met)
                if cand < nxt.get(m2, 1 << 30):
                    nxt[m2] = cand
        best = nxt
    return best[(1 << nv) - 1]


def sweep_check(tree):
    return sweep_width(tree) >= tree.n + 1


# -- fattened trees with a skirt ----------------------------------------------

class _Builder:
    def __init__(self):
        self.parent = []
        self.faces = []

    def new(self):
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

    def block(self, k):
        """A k x k grid; returns its four sides, each a list of k+1 vertices
        in anticlockwise order round the block."""
        pts = {(x, y): self.new() for x in range(k + 1) for y in range(k + 1)}
        for x in range(k):
            for y in range(k):
                self.faces.append([pts[x, y], pts[x + 1, y], pts[x + 1, y + 1], pts[x, y + 1]])
        bottom = [pts[x, 0] for x in range(k + 1)]
        right = [pts[k, y] for y in range(k + 1)]
        top = [pts[x, k] for x in range(k, -1, -1)]
        left = [pts[0, y] for y in range(k, -1, -1)]
        return [bottom, right, top, left]

    def glue(self, side_a, side_b):
        for a, b in zip(side_a, reversed(side_b)):
            self.union(a, b)


def _fat_tree(tree, k):
    """Each tree edge becomes a k x k block whose left and right sides meet
    the junction blocks of its end vertices; leaves are left open."""
    b = _Builder()
    degree = [0] * tree.n_vertices
    for u, v in tree.edges:
        degree[u] += 1
        degree[v] += 1
    if max(degree) > 4:
        raise ValueError("junction blocks have four sides")
    junction = {v: (b.block(k), []) for v in range(tree.n_vertices) if degree[v] > 1}
    for u, v in tree.edges:
        sides = b.block(k)
        for end, side in ((u, sides[3]), (v, sides[1])):
            if end in junction:
                jsides, used = junction[end]
                b.glue(side, jsides[len(used)])
                used.append(side)
    return b


def _boundary_cycle(faces):
    count = {}
    for f in faces:
        for a, c in zip(f, f[1:] + f[:1]):
            key = (min(a, c), max(a, c))
            count[key] = count.get(key, 0) + 1
    nbr = {}
    for (a, c), m in count.items():
        if m == 1:
            nbr.setdefault(a, []).append(c)
            nbr.setdefault(c, []).append(a)
    start = min(nbr)
    cycle, prev, cur = [start], None, start
    while True:
        nxt = nbr[cur][0] if nbr[cur][0] != prev else nbr[cur][1]
        if nxt == start:
            return cycle
        cycle.append(nxt)
        prev, cur = cur, nxt


def delta_n(n, ring_floor=8):
    """Fatten T_n to an n-thick disc, then attach rings inward from its
    boundary: a ring on a cycle of length L has ceil(L/2) faces and an
    inner cycle of that length, repeated until the cycle has at most
    ring_floor vertices, which is the boundary of the result."""
    tree = ternary_tree(n)
    b = _fat_tree(tree, n)
    faces = [[b.find(v) for v in f] for f in b.faces]
    cycle = _boundary_cycle(faces)
    fresh = len(b.parent)
    while len(cycle) > ring_floor:
        size = len(cycle)
        m = (size + 1) // 2
        inner = list(range(fresh, fresh + m))
        fresh += m
        for j in range(m):
            f = cycle[2 * j:2 * j + 3] if 2 * j + 2 < size else cycle[2 * j:] + cycle[:1]
            f = f + [inner[(j + 1) % m], inner[j]]
            faces.append(f)
        cycle = inner
    used = sorted({v for f in faces for v in f})
    relabel = {v: i for i, v in enumerate(used)}
    faces = [[relabel[v] for v in f] for f in faces]
    return from_faces(len(used), faces, star=relabel[cycle[0]])


def round_disc(area):
    """A squarest grid of unit squares with exactly the given area: a
    rows x cols rectangle plus a partial row along its top."""
    if area < 1:
        raise ValueError("area >= 1")
    rows = max(1, int(area ** 0.5))
    cols = area // rows
    extra = area - rows * cols
    if extra == 0:
        return grid(rows, cols)
    cells = [(x, y) for y in range(rows) for x in range(cols)]
    cells += [(x, rows) for x in range(extra)]
    ids = {}

    def vid(x, y):
        return ids.setdefault((x, y), len(ids))

    faces = [[vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1)] for x, y in cells]
    return from_faces(len(ids), faces, star=vid(0, 0))


@dataclass
class DeltaReport:
    n: int
    area: int
    boundary: int
    measures: dict
    fl: int
    fl_exact: bool
    round_fl: int


def delta_report(n, exact=None, max_faces=64, max_edges=160):
    d = delta_n(n)
    exact = n <= 2 if exact is None else exact
    res = shell_fl(d, mode="exact" if exact else "upper",
                   max_faces=max_faces, max_edges=max_edges)
    disc = round_disc(d.area)
    rres = shell_fl(disc, mode="exact" if exact else "upper",
                    max_faces=max_faces, max_edges=max_edges)
    return DeltaReport(n, d.area, len(d.circuit()), measure(d), res.value, res.exact,
                       rres.value)


def tree_pairs_sample(d, count, seed=0):
    """Random spanning trees of the 1-skeleton (random-weight Kruskal)."""
    rng = random.Random(seed)
    skel = d.skeleton()
    out = []
    for _ in range(count):
        order = list(range(d.n_edges))
        rng.shuffle(order)
        parent = list(range(d.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree = []
        for e in order:
            a, c = (find(x) for x in skel.edges[e])
            if a != c:
                parent[a] = c
                tree.append(e)
        out.append(tree_pair(d, tree))
    return out


__all__ = ["gamma_n", "gamma_report", "horizontal_tree", "ternary_tree", "sweep_width",
           "sweep_check", "delta_n", "delta_report", "round_disc", "tree_pairs_sample",
           "search_tree_pair", "TernaryTree", "GammaReport", "DeltaReport"]
