"""The integral Heisenberg group H3 = <x, y, z | [x,y]z^-1, [x,z], [y,z]>:
compression words for powers of z, the sequences that compress z^s, and a
filling procedure with linear filling length and cubic area."""

from .dps import ApplyRelator, FreeExpand, FreeReduce, NullSequence
from .errors import NotNullHomotopic
from .presentation import HeisenbergOracle, heisenberg
from .words import commutator, free_reduce, invert

K1 = 4


class OutOfRange(ValueError):
    pass


def _split(s, n):
    """s = A + B n^2 with 0 <= A < n^2, then A = s0 + s1 n."""
    big_a, big_b = s % (n * n), s // (n * n)
    return big_a % n, big_a // n, big_b


def compression_word(s, n):
    if s < 0 or n < 1:
        raise ValueError("need s >= 0 and n >= 1")
    s0, s1, big_b = _split(s, n)
    head = "z" * s0 + (commutator("x" * n, "y" * s1) if s1 else "")
    return head + commutator("x" * n, "y" * n) * big_b


class _Writer:
    """A word together with the moves that produced it."""

    def __init__(self, word, p):
        self.word = word
        self.moves = []
        self.closure = p.closure
        self.peak = len(word)

    def _push(self, moves):
        for m in moves:
            self.word = m.apply(self.word)
            self.moves.append(m)
            self.peak = max(self.peak, len(self.word))

    def replace(self, i, u, v):
        if self.word[i:i + len(u)] != u:
            raise AssertionError(f"{u!r} not at {i} in {self.word!r}")
        c = u + invert(v)
        if free_reduce(c) == "":
            from .combing import _free_path
            self._push(_free_path(u, v, i))
        else:
            if c not in self.closure:
                raise AssertionError(f"{c!r} is not a relator")
            self._push([ApplyRelator(c, i, len(u))])

    def swap(self, i):
        a, b = self.word[i], self.word[i + 1]
        if a == b.swapcase():
            raise AssertionError("swap of a cancelling pair")
        self.replace(i, a + b, b + a)

    def reduce(self, i):
        self._push([FreeReduce(i)])

    def expand(self, i, x):
        self._push([FreeExpand(i, x)])


def _absorb(wr, offset, t, n):
    """wr.word[offset:] begins with z u(t); rewrite that prefix to u(t+1)."""
    s0, k, _ = _split(t, n)
    if s0 < n - 1:
        return                          # z u(t) and u(t+1) are the same word
    if k == 0:
        for j in range(n):
            wr.expand(offset + n + j, "X")
    # z^n X^n Y^k x^n y^k  ->  X^n Y^(k+1) x^n y^(k+1)
    wr.expand(offset + 2 * n + k, "Y")
    q = offset + 2 * n + k + 1
    for m in range(n):
        wr.replace(q, "yx", "xyZ")
        pos = q + 2
        stop = offset + n - m
        while pos > stop:
            wr.swap(pos - 1)
            pos -= 1
        wr.reduce(stop - 1)


def _mirror(moves, words):
    """Moves acting on the inverses of the given words."""
    out = []
    for m, w in zip(moves, words):
        size = len(w)
        if isinstance(m, FreeReduce):
            out.append(FreeReduce(size - m.pos - 2))
        elif isinstance(m, FreeExpand):
            out.append(FreeExpand(size - m.pos, m.letter))
        else:
            u, v = m.u, m.v
            out.append(ApplyRelator(invert(u) + v, size - m.pos - len(u), len(u)))
    return out


def compress_sequence(s, n, k1=K1):
    """P-sequence from z^s to u(s) absorbing one z at a time."""
    if n < 1 or s < 0 or s > k1 * n * n:
        raise OutOfRange(f"need 0 <= s <= {k1} n^2")
    p = heisenberg()
    wr = _Writer("z" * s, p)
    for t in range(s):
        _absorb(wr, s - t - 1, t, n)
    if wr.word != compression_word(s, n):
        raise AssertionError("compression ended at the wrong word")
    return NullSequence("z" * s, wr.moves)


class _Filler:
    def __init__(self, w, n):
        self.p = heisenberg()
        self.wr = _Writer(w, self.p)
        self.n = n
        self.t_left = self.t_right = 0
        self.len_left = self.len_right = 0

    @property
    def middle(self):
        w = self.wr.word
        return w[self.len_left:len(w) - self.len_right]

    def _right(self, i):
        """Carry the z at absolute position i to the right block."""
        wr = self.wr
        while True:
            end = len(wr.word) - self.len_right
            if i == end - 1:
                break
            if wr.word[i + 1] == "Z":
                wr.reduce(i)
                return
            wr.swap(i)
            i += 1
        self._check_range(self.t_right)
        _absorb(wr, i, self.t_right, self.n)
        self.t_right += 1
        self.len_right = len(compression_word(self.t_right, self.n))

    def _left(self, i):
        wr = self.wr
        while i > self.len_left:
            if wr.word[i - 1] == "z":
                wr.reduce(i - 1)
                return
            wr.swap(i - 1)
            i -= 1
        self._check_range(self.t_left)
        sub = _Writer("z" + compression_word(self.t_left, self.n), self.p)
        words = []
        orig_push = sub._push

        def record(moves):
            for m in moves:
                words.append(sub.word)
                orig_push([m])
        sub._push = record
        _absorb(sub, 0, self.t_left, self.n)
        wr._push(_mirror(sub.moves, words))
        self.t_left += 1
        self.len_left = len(compression_word(self.t_left, self.n))

    def _check_range(self, t):
        if t + 1 > K1 * self.n * self.n:
            raise OutOfRange("too many z letters for the compression scale")

    def _clear_z(self):
        while True:
            mid = self.middle
            if "z" in mid:
                self._right(self.len_left + mid.rindex("z"))
            elif "Z" in mid:
                self._left(self.len_left + mid.index("Z"))
            else:
                return

    def run(self):
        self._clear_z()
        while self.middle:
            mid, off = self.middle, self.len_left
            for i in range(len(mid) - 1):
                if mid[i] == mid[i + 1].swapcase():
                    self.wr.reduce(off + i)
                    break
            else:
                i = next((i for i in range(len(mid) - 1)
                          if mid[i] in "yY" and mid[i + 1] in "xX"), None)
                if i is None:
                    raise NotNullHomotopic("middle word does not reduce to the identity")
                self._lift_swap(off + i)
            self._clear_z()
        # invert(U) U
        while self.wr.word:
            self.wr.reduce(len(self.wr.word) // 2 - 1)
        return self.wr

    def _lift_swap(self, i):
        a, b = self.wr.word[i], self.wr.word[i + 1]
        for zl in "zZ":
            for v in (zl + b + a, b + zl + a, b + a + zl):
                if a + b + invert(v) in self.p.closure:
                    self.wr.replace(i, a + b, v)
                    return
        # two relator moves: a b -> a z Z b -> a z b Z -> b a Z
        for zl in "zZ":
            if a + zl + b + invert(b + a) in self.p.closure:
                self.wr.expand(i + 1, zl)
                self.wr.swap(i + 2)
                self.wr.replace(i, a + zl + b, b + a)
                return
        raise AssertionError(f"no lifted relator for {a + b!r}")


def h3_fill(w, n=None):
    """Null-sequence for a null-homotopic word of H3: z letters are carried
    to the ends and compressed there, and the z-free middle is sorted by
    lifted commutator moves, each of which emits one z."""
    p = heisenberg()
    if not HeisenbergOracle(p).decide(w):
        raise NotNullHomotopic(f"{w!r} is not trivial in H3")
    if w in p.closure:
        return NullSequence(w, [ApplyRelator(w, 0)])
    f = _Filler(w, n or max(2, len(w)))
    wr = f.run()
    return NullSequence(w, wr.moves)
