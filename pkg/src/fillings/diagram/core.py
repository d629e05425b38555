"""Planar van Kampen diagrams stored as combinatorial maps.

Edge e owns half-edges 2e and 2e+1 (twins).  nxt[h] is the half-edge that
follows h around the face lying to the right of h, and face[h] names that
face (0 is the outer face).  With this convention the outer cycle, read
from the base half-edge, is the anticlockwise boundary circuit of the
diagram, and interior faces are read clockwise.  The rotation around a
vertex is recovered as g -> nxt[g ^ 1].
"""

import math
from collections import deque

from ..words import free_reduce, inverse_letter


class DiagramError(ValueError):
    pass


OUTER = 0


class Graph:
    """A finite multigraph on vertices 0..n-1; loops allowed."""

    def __init__(self, n, edges):
        self.n = n
        self.edges = [tuple(e) for e in edges]

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            if u != v:
                adj[v].append((u, i))
        for row in adj:
            row.sort()
        return adj

    def bfs(self, root, adj=None):
        adj = adj or self.adjacency()
        dist = [-1] * self.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for v, _ in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    q.append(v)
        return dist

    def distances(self):
        adj = self.adjacency()
        return [self.bfs(v, adj) for v in range(self.n)]

    def connected(self):
        return self.n == 0 or min(self.bfs(0)) >= 0

    def diameter(self):
        if self.n == 0:
            return 0
        adj = self.adjacency()
        best = 0
        for v in range(self.n):
            d = self.bfs(v, adj)
            if min(d) < 0:
                raise DiagramError("graph is not connected")
            best = max(best, max(d))
        return best


class Diagram:
    def __init__(self, n_vertices, orig, label, nxt, star=0, base=None):
        self.n_vertices = n_vertices
        self.orig = list(orig)
        self.label = list(label)
        self.nxt = list(nxt)
        self.star = star
        self.base = base
        self._validate()
        self.face = [None] * len(self.orig)
        self.faces = [base]
        if base is not None:
            self._mark(base, OUTER)
        for h in range(len(self.orig)):
            if self.face[h] is None:
                self.faces.append(h)
                self._mark(h, len(self.faces) - 1)
        if self.euler() != 2:
            raise DiagramError(f"not planar: V - E + F = {self.euler()}")

    def _mark(self, h, f):
        for g in self._orbit(h):
            self.face[g] = f

    def _orbit(self, h):
        out = [h]
        g = self.nxt[h]
        while g != h:
            out.append(g)
            g = self.nxt[g]
        return out

    def _validate(self):
        m = len(self.orig)
        if m % 2 or len(self.label) != m or len(self.nxt) != m:
            raise DiagramError("half-edge arrays have inconsistent sizes")
        if sorted(self.nxt) != list(range(m)):
            raise DiagramError("nxt is not a permutation")
        if not 0 <= self.star < self.n_vertices:
            raise DiagramError("base vertex out of range")
        for h in range(m):
            if not 0 <= self.orig[h] < self.n_vertices:
                raise DiagramError(f"half-edge {h} has a bad origin")
            if self.label[h ^ 1] != inverse_letter(self.label[h]):
                raise DiagramError(f"edge {h // 2} labels are not inverse")
            if self.orig[self.nxt[h]] != self.orig[h ^ 1]:
                raise DiagramError(f"nxt[{h}] does not start where {h} ends")
        if m == 0:
            if self.n_vertices != 1 or self.base is not None:
                raise DiagramError("an edgeless diagram is a single vertex")
            return
        if self.base is None or self.orig[self.base] != self.star:
            raise DiagramError("base half-edge must leave the base vertex")
        if not self.skeleton().connected():
            raise DiagramError("diagram is not connected")

    # -- basic structure ----------------------------------------------------

    @property
    def n_edges(self):
        return len(self.orig) // 2

    @property
    def area(self):
        return len(self.faces) - 1

    def target(self, h):
        return self.orig[h ^ 1]

    def euler(self):
        return self.n_vertices - self.n_edges + len(self.faces)

    def edge(self, e):
        """(tail, head, label) of edge e read along half-edge 2e."""
        return self.orig[2 * e], self.orig[2 * e + 1], self.label[2 * e]

    def rotation(self, v):
        """Half-edges leaving v in anticlockwise order."""
        hs = [h for h in range(len(self.orig)) if self.orig[h] == v]
        if not hs:
            return []
        out = [hs[0]]
        g = self.nxt[hs[0] ^ 1]
        while g != hs[0]:
            out.append(g)
            g = self.nxt[g ^ 1]
        return out

    def face_cycle(self, f):
        h = self.faces[f]
        return [] if h is None else self._orbit(h)

    def face_word(self, f):
        return "".join(self.label[h] for h in self.face_cycle(f))

    def face_length(self, f):
        return len(self.face_cycle(f))

    def circuit(self):
        return self.face_cycle(OUTER)

    def boundary_vertices(self):
        if self.base is None:
            return {self.star}
        return {self.orig[h] for h in self.circuit()}

    def sides(self, e):
        return self.face[2 * e], self.face[2 * e + 1]

    def skeleton(self):
        return Graph(self.n_vertices, [(self.orig[2 * e], self.orig[2 * e + 1])
                                       for e in range(self.n_edges)])

    def dual(self):
        """Dual 1-skeleton: vertex 0 is the outer face, edge e is dual to e."""
        return Graph(len(self.faces), [self.sides(e) for e in range(self.n_edges)])

    def vertex_words(self):
        """A path label from the base vertex to every vertex."""
        words = [None] * self.n_vertices
        words[self.star] = ""
        q = deque([self.star])
        out = {}
        for h in range(len(self.orig)):
            out.setdefault(self.orig[h], []).append(h)
        while q:
            v = q.popleft()
            for h in out.get(v, ()):
                t = self.target(h)
                if words[t] is None:
                    words[t] = words[v] + self.label[h]
                    q.append(t)
        return words

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.dumps() == other.dumps()

    def __repr__(self):
        return (f"Diagram(V={self.n_vertices}, E={self.n_edges}, area={self.area}, "
                f"boundary={boundary_word(self)!r})")

    # -- serialisation --------------------------------------------------------

    def dumps(self):
        lines = [f"vertices {self.n_vertices}", f"star {self.star}",
                 f"base {'-' if self.base is None else self.base}"]
        for e in range(self.n_edges):
            u, v, x = self.edge(e)
            lines.append(f"edge {e} {u} {v} {x}")
        for v in range(self.n_vertices):
            rot = self.rotation(v)
            if rot:
                lines.append(f"rot {v} " + " ".join(map(str, rot)))
        for f in range(1, len(self.faces)):
            lines.append(f"face {f} {self.faces[f]} {self.face_word(f)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        n = star = None
        base = None
        edges, rots = [], {}
        for raw in text.splitlines():
            parts = raw.split("#", 1)[0].split()
            if not parts:
                continue
            key = parts[0]
            if key == "vertices":
                n = int(parts[1])
            elif key == "star":
                star = int(parts[1])
            elif key == "base":
                base = None if parts[1] == "-" else int(parts[1])
            elif key == "edge":
                if int(parts[1]) != len(edges):
                    raise DiagramError("edges must be listed in order")
                edges.append((int(parts[2]), int(parts[3]), parts[4]))
            elif key == "rot":
                rots[int(parts[1])] = [int(h) for h in parts[2:]]
            elif key != "face":
                raise DiagramError(f"unknown line {raw!r}")
        if n is None or star is None:
            raise DiagramError("missing 'vertices' or 'star' line")
        return from_rotations(n, edges, rots, star, base)


def _half_edges(edges):
    orig, label = [], []
    for u, v, x in edges:
        orig += [u, v]
        label += [x, inverse_letter(x)]
    return orig, label


def from_rotations(n, edges, rotations, star=0, base=None):
    """Build a diagram from anticlockwise half-edge orders at each vertex."""
    orig, label = _half_edges(edges)
    sigma = {}
    for v, rot in rotations.items():
        for i, h in enumerate(rot):
            if orig[h] != v:
                raise DiagramError(f"half-edge {h} does not leave vertex {v}")
            sigma[h] = rot[(i + 1) % len(rot)]
    if len(sigma) != len(orig):
        raise DiagramError("rotations must list every half-edge once")
    nxt = [sigma[h ^ 1] for h in range(len(orig))]
    return Diagram(n, orig, label, nxt, star, base)


def from_faces(n, faces, star=None, letter="a"):
    """Build a disc from its interior faces, each a cycle of distinct
    vertices.  Faces are reoriented to agree along shared edges; the edges
    used by a single face form the boundary, which must be one simple
    cycle.  Every edge is labelled letter, oriented from low to high."""
    faces = [list(f) for f in faces]
    index, edges = {}, []
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            key = (min(a, b), max(a, b))
            if key not in index:
                index[key] = len(edges)
                edges.append(key)
    users = {}
    for i, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            users.setdefault((min(a, b), max(a, b)), []).append(i)
    if any(len(u) > 2 for u in users.values()):
        raise DiagramError("an edge lies on more than two faces")
    flip = {0: False}
    queue = deque([0]) if faces else deque()
    while queue:
        i = queue.popleft()
        f = faces[i][::-1] if flip[i] else faces[i]
        for a, b in zip(f, f[1:] + f[:1]):
            for j in users[min(a, b), max(a, b)]:
                if j == i:
                    continue
                g = faces[j]
                k = g.index(a)
                forward = g[(k + 1) % len(g)] == b
                want = forward
                if j in flip:
                    if flip[j] != want:
                        raise DiagramError("faces do not glue to an orientable surface")
                else:
                    flip[j] = want
                    queue.append(j)
    if len(flip) != len(faces):
        raise DiagramError("faces are not connected across edges")
    faces = [f[::-1] if flip[i] else f for i, f in enumerate(faces)]

    def half(a, b):
        e = index[min(a, b), max(a, b)]
        return 2 * e + (a > b)

    m = 2 * len(edges)
    orig = [None] * m
    label = [None] * m
    for e, (u, v) in enumerate(edges):
        orig[2 * e], orig[2 * e + 1] = u, v
        label[2 * e], label[2 * e + 1] = letter, inverse_letter(letter)
    nxt = [None] * m
    for f in faces:
        for a, b, c in zip(f, f[1:] + f[:1], f[2:] + f[:2]):
            nxt[half(a, b)] = half(b, c)
    outer = {}
    for h in range(m):
        if nxt[h ^ 1] is None and nxt[h] is None:
            raise DiagramError("dangling edge")
        if nxt[h] is None:
            if orig[h] in outer:
                raise DiagramError("boundary is not a simple cycle")
            outer[orig[h]] = h
    for v, h in outer.items():
        nxt[h] = outer[orig[h ^ 1]]
    if star is None:
        star = min(outer)
    return Diagram(n, orig, label, nxt, star, outer[star])


def from_angles(n, edges, angle, star=0, base=None):
    """Build a diagram from a drawing: angle(h) orders the half-edges at
    their origin anticlockwise."""
    orig, _ = _half_edges(edges)
    rots = {}
    for h in range(len(orig)):
        rots.setdefault(orig[h], []).append(h)
    for v in rots:
        rots[v].sort(key=angle)
    return from_rotations(n, edges, rots, star, base)


def from_points(points, edges, star=0, base=None):
    """Straight-line drawing; base defaults to the edge leaving star that
    has the outer face on its right, if star is the lowest-leftmost point."""
    orig, _ = _half_edges(edges)

    def angle(h):
        (x0, y0), (x1, y1) = points[orig[h]], points[orig[h ^ 1]]
        return math.atan2(y1 - y0, x1 - x0) % (2 * math.pi)

    if base is None and edges:
        out = [h for h in range(len(orig)) if orig[h] == star]
        base = min(out, key=angle)
    return from_angles(len(points), edges, angle, star, base)


def vertex():
    return Diagram(1, [], [], [], 0, None)


def arc(x):
    """A single edge labelled x; boundary x x^-1."""
    return Diagram(2, [0, 1], [x, inverse_letter(x)], [1, 0], 0, 0)


def grid(rows, cols, h="a", v="b"):
    """A rows x cols grid of squares over Z^2, base at the bottom-left
    corner.  Boundary h^cols v^rows H^cols V^rows."""
    points = [(x, y) for y in range(rows + 1) for x in range(cols + 1)]
    idx = {p: i for i, p in enumerate(points)}
    edges = []
    for y in range(rows + 1):
        for x in range(cols):
            edges.append((idx[x, y], idx[x + 1, y], h))
    for y in range(rows):
        for x in range(cols + 1):
            edges.append((idx[x, y], idx[x, y + 1], v))
    return from_points(points, edges)


def square(word="abAB"):
    """A single face with the given boundary word of length 4."""
    return polygon(word)


def polygon(word):
    """One face bounded by a simple cycle reading word anticlockwise."""
    k = len(word)
    if k == 0:
        return vertex()
    edges = [(i, (i + 1) % k, word[i]) for i in range(k)]
    if k == 1:
        # a loop: outer side first, face inside
        return Diagram(1, [0, 0], [word, inverse_letter(word)], [0, 1], 0, 0)
    # outer cycle 0,2,4,... ; the face runs through the odd twins backwards
    orig, label = _half_edges(edges)
    nxt = [0] * (2 * k)
    for i in range(k):
        nxt[2 * i] = 2 * ((i + 1) % k)
        nxt[2 * i + 1] = 2 * ((i - 1) % k) + 1
    return Diagram(k, orig, label, nxt, 0, 0)


# -- operations --------------------------------------------------------------

def boundary_word(d):
    return "".join(d.label[h] for h in d.circuit())


def check(d, p):
    closure = p.closure
    return all(d.face_word(f) in closure for f in range(1, len(d.faces)))


def is_reduced_boundary(d):
    w = boundary_word(d)
    return free_reduce(w) == w
