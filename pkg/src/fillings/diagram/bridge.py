"""Build a van Kampen diagram from a null-sequence.

The sequence is first rewritten so that every relator move replaces one
letter.  Then, walking backwards from the empty word, each move is undone
on the diagram: a free reduction grows a spike, a relator move glues a
face along the boundary, and a free expansion folds two neighbouring
boundary edges together.  A fold whose two edges already share both ends
would close off a sphere; in that case the pinched-off bubble is thrown
away (those moves were redundant), which only lowers area and boundary
lengths.
"""

from ..dps import ApplyRelator, FreeExpand, FreeReduce, edge_form, replay
from ..words import inverse_letter
from .core import Diagram, DiagramError, OUTER


class InvalidSequence(DiagramError):
    pass


class _Builder:
    def __init__(self):
        self.orig, self.label, self.nxt, self.right = {}, {}, {}, {}
        self.vertices = {0}
        self.star = 0
        self.next_vertex = 1
        self.next_half = 0
        self.next_face = 1
        self.circuit = []

    def new_edge(self, u, v, x):
        h = self.next_half
        self.next_half += 2
        self.orig[h], self.orig[h + 1] = u, v
        self.label[h], self.label[h + 1] = x, inverse_letter(x)
        return h

    def new_vertex(self):
        v = self.next_vertex
        self.next_vertex += 1
        self.vertices.add(v)
        return v

    def drop_edge(self, h):
        for g in (h, h ^ 1):
            for table in (self.orig, self.label, self.nxt, self.right):
                table.pop(g, None)

    def vertex_at(self, i):
        c = self.circuit
        if not c:
            return self.star
        if i < len(c):
            return self.orig[c[i]]
        return self.orig[c[-1] ^ 1]

    def relink(self):
        c = self.circuit
        for k, h in enumerate(c):
            self.nxt[h] = c[(k + 1) % len(c)]
            self.right[h] = OUTER

    def spike(self, i, x):
        v, q = self.vertex_at(i), self.new_vertex()
        h = self.new_edge(v, q, x)
        self.circuit[i:i] = [h, h ^ 1]
        self.relink()

    def face(self, i, j, x):
        s, t = self.vertex_at(i), self.vertex_at(j)
        h = self.new_edge(s, t, x)
        g = h ^ 1
        f = self.next_face
        self.next_face += 1
        cycle = self.circuit[i:j] + [g]
        for k, a in enumerate(cycle):
            self.nxt[a] = cycle[(k + 1) % len(cycle)]
            self.right[a] = f
        self.circuit[i:j] = [h]
        self.relink()

    def fold(self, i):
        c = self.circuit
        h, k = c[i], c[i + 1]
        if k == h ^ 1:
            q = self.orig[k]
            self.drop_edge(h)
            self.vertices.discard(q)
            del c[i:i + 2]
            self.relink()
            return
        p, r = self.orig[h], self.orig[k ^ 1]
        if p != r:
            keep, lose = (r, p) if p != self.star and r == self.star else (p, r)
            for g, v in self.orig.items():
                if v == lose:
                    self.orig[g] = keep
            self.vertices.discard(lose)
            kk = k ^ 1
            del c[i:i + 2]
            if self.right[kk] == OUTER:
                c[c.index(kk)] = h
            else:
                pred = next(a for a, b in self.nxt.items() if b == kk)
                nn = self.nxt[kk]
                self.nxt[pred if pred != kk else h] = h
                self.nxt[h] = h if nn == kk else nn
                self.right[h] = self.right[kk]
            self.drop_edge(k)
            self.relink()
            return
        self.drop_bubble(i, h, k)

    def drop_bubble(self, i, h, k):
        """h and k bound a disc hanging off the rest at orig[h]."""
        cut = {h // 2, k // 2}
        faces, stack = set(), [self.right[h ^ 1], self.right[k ^ 1]]
        while stack:
            f = stack.pop()
            if f == OUTER or f in faces:
                continue
            faces.add(f)
            for a, g in self.right.items():
                if g == f and a // 2 not in cut:
                    stack.append(self.right[a ^ 1])
        if OUTER in {self.right[h ^ 1], self.right[k ^ 1]}:
            raise DiagramError("fold of a non-disc bigon")
        halves = [a for a, g in self.right.items() if g in faces]
        edges = {a // 2 for a in halves} | cut
        inner = {self.orig[2 * e] for e in edges} | {self.orig[2 * e + 1] for e in edges}
        for e in edges:
            self.drop_edge(2 * e)
        still = set(self.orig.values()) | {self.star}
        self.vertices -= {v for v in inner if v not in still}
        del self.circuit[i:i + 2]
        self.relink()

    def build(self):
        order = sorted(self.vertices, key=lambda v: (v != self.star, v))
        vid = {v: n for n, v in enumerate(order)}
        hs = sorted(h for h in self.orig if h % 2 == 0)
        hid = {}
        for n, h in enumerate(hs):
            hid[h], hid[h + 1] = 2 * n, 2 * n + 1
        m = 2 * len(hs)
        orig, label, nxt = [0] * m, [""] * m, [0] * m
        for h, n in hid.items():
            orig[n] = vid[self.orig[h]]
            label[n] = self.label[h]
            nxt[n] = hid[self.nxt[h]]
        base = hid[self.circuit[0]] if self.circuit else None
        return Diagram(len(order), orig, label, nxt, 0, base)


def sequence_to_diagram(ns, p):
    r = replay(ns, p)
    if not r.null:
        raise InvalidSequence(r.error or "sequence does not end at the empty word")
    ns = edge_form(ns)
    words = replay(ns, p).words
    b = _Builder()
    for i in range(len(ns.moves) - 1, -1, -1):
        m, before = ns.moves[i], words[i]
        if isinstance(m, FreeReduce):
            b.spike(m.pos, before[m.pos])
        elif isinstance(m, FreeExpand):
            b.fold(m.pos)
        elif isinstance(m, ApplyRelator):
            b.face(m.pos, m.pos + len(m.v), m.u)
        else:
            raise InvalidSequence(f"move {m} has no diagram counterpart")
        got = "".join(b.label[h] for h in b.circuit)
        if got != before:
            raise DiagramError(f"construction lost track: {got!r} != {before!r}")
    return b.build()
