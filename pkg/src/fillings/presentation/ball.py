"""Balls in Cayley graphs, and probes of hyperbolicity on them."""

from fractions import Fraction

import numpy as np

from ..errors import BallTooSmall
from ..words import invert


class CayleyBall:
    """The ball of a given radius about 1 in the Cayley graph.  Vertices are
    stored as their canonical forms (least shortest words), in BFS order;
    distances[i] is the word length of vertex i."""

    def __init__(self, presentation, oracle, radius, vertices, distances, edges, lookup):
        self.presentation = presentation
        self.oracle = oracle
        self.radius = radius
        self.vertices = vertices
        self.distances = distances
        self.edges = edges
        self._lookup = lookup
        self.index = {w: i for i, w in enumerate(vertices)}
        self._dmat = None
        self.adjacency = [[] for _ in vertices]
        for i, x, j in edges:
            self.adjacency[i].append((x, j))

    def __len__(self):
        return len(self.vertices)

    def find(self, w):
        """Index of the ball vertex equal to w in the group, or None."""
        return self._lookup(w)

    def canonical(self, w):
        i = self.find(w)
        if i is None:
            raise BallTooSmall(f"{w!r} lies outside the ball of radius {self.radius}")
        return self.vertices[i]

    def word_length(self, w):
        i = self.find(w)
        if i is None:
            raise BallTooSmall(f"{w!r} lies outside the ball of radius {self.radius}")
        return self.distances[i]

    def metric(self, u, v):
        """d_X between the elements represented by u and v."""
        return self.word_length(invert(u) + v)

    def step(self, i, x):
        """Index of vertex i times letter x, or None when outside."""
        for y, j in self.adjacency[i]:
            if y == x:
                return j
        return None

    def graph_distances(self):
        """All-pairs path distances inside the ball's own graph."""
        if self._dmat is None:
            n = len(self.vertices)
            nbrs = [sorted({j for _, j in adj}) for adj in self.adjacency]
            d = np.full((n, n), -1, dtype=np.int32)
            for s in range(n):
                row = d[s]
                row[s] = 0
                frontier = [s]
                k = 0
                while frontier:
                    k += 1
                    nxt = []
                    for a in frontier:
                        for b in nbrs[a]:
                            if row[b] < 0:
                                row[b] = k
                                nxt.append(b)
                    frontier = nxt
            self._dmat = d
        return self._dmat


def cayley_ball(p, oracle, radius):
    """BFS ball of the given radius.  Equality of elements is decided by the
    oracle, through its element key when it has one, else by testing
    g h^-1 against every stored vertex (raising OracleIndecisive)."""
    letters = p.alphabet.letters
    vertices = [""]
    distances = [0]
    use_key = oracle.key("") is not None
    keys = {oracle.key(""): 0} if use_key else None

    def lookup(w):
        if use_key:
            return keys.get(oracle.key(w))
        for i, v in enumerate(vertices):
            if oracle.equal(w, v):
                return i
        return None

    layer = [0]
    for k in range(1, radius + 1):
        new = []
        for i in layer:
            base = vertices[i]
            for x in letters:
                if base and base[-1] == x.swapcase():
                    continue
                w = base + x
                if lookup(w) is None:
                    vertices.append(w)
                    distances.append(k)
                    if use_key:
                        keys[oracle.key(w)] = len(vertices) - 1
                    new.append(len(vertices) - 1)
        layer = new
    edges = []
    for i, v in enumerate(vertices):
        for x in letters:
            if v and v[-1] == x.swapcase():
                j = lookup(v[:-1])
            else:
                j = lookup(v + x)
            if j is not None:
                edges.append((i, x, j))
    return CayleyBall(p, oracle, radius, vertices, distances, edges, lookup)


def four_point_delta(ball, strict=False):
    """Least delta with d(x,w)+d(y,z) <= max(d(x,y)+d(z,w), d(x,z)+d(y,w)) + delta
    for all vertices x, y, z, w, using distances inside the ball.

    Distances measured inside a ball can exceed true distances near its
    rim.  With strict=True only vertices within radius/2 of 1 are used;
    geodesics between two of those cannot leave the ball, so the in-ball
    distances among them are the true ones."""
    d = ball.graph_distances()
    if strict:
        keep = [i for i, r in enumerate(ball.distances) if 2 * r <= ball.radius]
        d = d[np.ix_(keep, keep)]
    n = len(d)
    best = 0
    for x in range(n):
        dx = d[x]
        s1 = dx[:, None, None] + d[None, :, :]          # d(x,y) + d(z,w)
        s2 = dx[None, :, None] + d[:, None, :]          # d(x,z) + d(y,w)
        s3 = dx[None, None, :] + d[:, :, None]          # d(x,w) + d(y,z)
        hi = np.maximum(np.maximum(s1, s2), s3)
        lo = np.minimum(np.minimum(s1, s2), s3)
        mid = s1 + s2 + s3 - hi - lo
        best = max(best, int((hi - mid).max()))
    return Fraction(best)


def l_delta_check(ball, delta):
    """True iff every triple x, y, z of ball vertices has some vertex t with
    max(d(x,t)+d(t,y)-d(x,y), d(y,t)+d(t,z)-d(y,z), d(z,t)+d(t,x)-d(z,x)) <= delta."""
    d = ball.graph_distances().astype(np.int64)
    delta = Fraction(delta)
    for x in range(len(d)):
        dx = d[x]
        t1 = dx[None, :] + d - dx[:, None]               # [y, t]
        t2 = d[:, None, :] + d[None, :, :] - d[:, :, None]  # [y, z, t]
        t3 = d + dx[None, :] - dx[:, None]               # [z, t]
        val = np.maximum(np.maximum(t1[:, None, :], t2), t3[None, :, :])
        if (val.min(axis=2) > delta).any():
            return False
    return True
