"""Diagram measurements: area, diameters, radius, gallery length, dual
spanning-tree pairs and DGL."""

from dataclasses import dataclass

from .core import DiagramError, Graph


class NotSpanning(DiagramError):
    pass


class TooManyTrees(RuntimeError):
    pass


def _ecc_max(graph):
    return graph.diameter() if graph.n else 0


def idiam(d):
    return _ecc_max(d.skeleton())


def rad(d):
    g = d.skeleton()
    boundary = d.boundary_vertices()
    # multi-source BFS from the boundary
    adj = g.adjacency()
    dist = [-1] * g.n
    frontier = sorted(boundary)
    for v in frontier:
        dist[v] = 0
    while frontier:
        nxt = []
        for u in frontier:
            for v, _ in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return max(dist)


def gl(d):
    return _ecc_max(d.dual())


def measure(d):
    return {"area": d.area, "idiam": idiam(d), "rad": rad(d), "gl": gl(d)}


def ediam(d, ball):
    """Max d_X distance between the group elements labelling the vertices."""
    words = d.vertex_words()
    best = 0
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            best = max(best, ball.metric(words[i], words[j]))
    return best


# -- spanning trees ----------------------------------------------------------

def geodesic_spanning_tree(graph, root):
    """BFS tree as a sorted list of edge indices: each vertex hangs from its
    lowest-indexed neighbour one step closer to root (lowest edge index
    among parallel edges)."""
    if hasattr(graph, "skeleton"):
        graph = graph.skeleton()
    adj = graph.adjacency()
    dist = graph.bfs(root, adj)
    if min(dist, default=0) < 0:
        raise NotSpanning("graph is not connected")
    tree = []
    for v in range(graph.n):
        if v == root:
            continue
        tree.append(min((u, e) for u, e in adj[v] if dist[u] == dist[v] - 1)[1])
    return sorted(tree)


def _is_spanning_tree(n, edges, chosen):
    if len(chosen) != n - 1:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in chosen:
        a, b = find(edges[i][0]), find(edges[i][1])
        if a == b:
            return False
        parent[a] = b
    return True


@dataclass
class TreePair:
    tree: list
    dual_tree: list

    def diameters(self, d):
        t = Graph(d.n_vertices, [d.skeleton().edges[e] for e in self.tree])
        s = Graph(len(d.faces), [d.dual().edges[e] for e in self.dual_tree])
        return t.diameter(), s.diameter()


def tree_pair(d, tree):
    """tree: edge indices of a spanning tree of the 1-skeleton.  The dual
    tree consists of the duals of the remaining edges."""
    tree = sorted(set(tree))
    if not _is_spanning_tree(d.n_vertices, d.skeleton().edges, tree):
        raise NotSpanning("edges do not form a spanning tree of the 1-skeleton")
    chosen = set(tree)
    dual_tree = [e for e in range(d.n_edges) if e not in chosen]
    if not _is_spanning_tree(len(d.faces), d.dual().edges, dual_tree):
        raise NotSpanning("complementary dual edges do not form a spanning tree")
    return TreePair(tree, dual_tree)


def count_spanning_trees(graph):
    """Matrix-Tree theorem with exact fraction-free (Bareiss) elimination."""
    n = graph.n
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]
    k = n - 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if m[r][i]), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[k - 1][k - 1]


def spanning_trees(graph):
    """All spanning trees as sorted edge-index tuples, lexicographic order."""
    n, edges = graph.n, graph.edges
    usable = [i for i, (u, v) in enumerate(edges) if u != v]
    if n <= 1:
        yield ()
        return

    def connected_with(chosen, rest):
        g = Graph(n, [edges[i] for i in list(chosen) + rest])
        return g.connected()

    def rec(k, chosen, parent):
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if k == len(usable):
            return
        if not connected_with(chosen, usable[k:]):
            return
        i = usable[k]
        u, v = edges[i]
        ru, rv = _root(parent, u), _root(parent, v)
        if ru != rv:
            p2 = dict(parent)
            p2[ru] = rv
            yield from rec(k + 1, chosen + [i], p2)
        yield from rec(k + 1, chosen, parent)

    yield from rec(0, [], {})


def _root(parent, x):
    while x in parent:
        x = parent[x]
    return x


@dataclass
class DGLResult:
    value: int
    pair: TreePair
    exact: bool
    trees: int = 0

    def __str__(self):
        return f"{self.value} ({'exact' if self.exact else 'upper bound'})"


def _pair_cost(d, tree, skel, dual):
    chosen = set(tree)
    rest = [e for e in range(d.n_edges) if e not in chosen]
    t = Graph(d.n_vertices, [skel.edges[e] for e in tree]).diameter()
    s = Graph(len(d.faces), [dual.edges[e] for e in rest]).diameter()
    return t + s, rest


def dgl(d, mode="exact", cap=200_000):
    skel, dual = d.skeleton(), d.dual()
    if mode == "exact":
        count = count_spanning_trees(skel)
        if count > cap:
            raise TooManyTrees(f"{count} spanning trees exceed the cap {cap}")
        best = None
        for tree in spanning_trees(skel):
            cost, rest = _pair_cost(d, tree, skel, dual)
            if best is None or cost < best.value:
                best = DGLResult(cost, TreePair(list(tree), rest), True, count)
        return best
    if mode != "heuristic":
        raise ValueError(f"unknown dgl mode {mode!r}")
    best = None
    for root in range(d.n_vertices):
        tree = geodesic_spanning_tree(skel, root)
        cost, rest = _pair_cost(d, tree, skel, dual)
        if best is None or cost < best.value:
            best = DGLResult(cost, TreePair(tree, rest), False)
    tree = list(best.pair.tree)
    improved = True
    while improved:
        improved = False
        for e in range(d.n_edges):
            if e in tree or skel.edges[e][0] == skel.edges[e][1]:
                continue
            for f in list(tree):
                cand = sorted(set(tree) - {f} | {e})
                if not _is_spanning_tree(d.n_vertices, skel.edges, cand):
                    continue
                cost, rest = _pair_cost(d, cand, skel, dual)
                if cost < best.value:
                    best = DGLResult(cost, TreePair(cand, rest), False)
                    tree = cand
                    improved = True
                    break
            if improved:
                break
    return best


def double_exponential_bounds(d, boundary_len, n_generators, B):
    """The two bounds linking GL to IDiam and Area to GL, as exact integers."""
    a = 2 * n_generators + 1
    m = measure(d)
    return {"gl": m["gl"], "gl_bound": 2 * a ** (1 + 2 * m["idiam"]),
            "area": m["area"], "area_bound": boundary_len * (B + 1) ** m["gl"]}
