"""Decision procedures for "does w represent the identity"."""

from enum import Enum
from fractions import Fraction

from ..errors import OracleIndecisive
from ..words import exponent_sums, free_reduce, invert
from .core import free_abelian, heisenberg, bs12


class Verdict(Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class WordOracle:
    """Base class.  Subclasses implement _trivial(w) returning a Verdict and
    may implement key(w), a hashable value equal exactly for words that
    represent the same element."""

    variant = "?"

    def __init__(self, presentation):
        self.presentation = presentation

    def __repr__(self):
        return f"{type(self).__name__}({self.presentation!r})"

    def is_trivial(self, w):
        self.presentation.alphabet.check(w)
        return self._trivial(w)

    def decide(self, w):
        v = self.is_trivial(w)
        if v is Verdict.UNKNOWN:
            raise OracleIndecisive(f"{self.variant} oracle cannot decide {w!r}")
        return v is Verdict.TRIVIAL

    def equal(self, u, v):
        return self.decide(u + invert(v))

    def key(self, w):
        return None

    def _trivial(self, w):
        raise NotImplementedError


def _same_closure(p, q):
    return p.alphabet == q.alphabet and p.closure == q.closure


class FreeReductionOracle(WordOracle):
    variant = "FreeReduction"

    def __init__(self, presentation):
        if presentation.relators:
            raise ValueError("free-reduction oracle needs a presentation without relators")
        super().__init__(presentation)

    def _trivial(self, w):
        return Verdict.TRIVIAL if free_reduce(w) == "" else Verdict.NONTRIVIAL

    def key(self, w):
        return free_reduce(w)


class ExponentSumOracle(WordOracle):
    variant = "ExponentSum"

    def __init__(self, presentation):
        std = free_abelian(len(presentation.alphabet))
        if not _same_closure(presentation, _rename(std, presentation)):
            raise ValueError("exponent-sum oracle needs the standard free abelian presentation")
        super().__init__(presentation)

    def _trivial(self, w):
        if any(exponent_sums(w, self.presentation.alphabet)):
            return Verdict.NONTRIVIAL
        return Verdict.TRIVIAL

    def key(self, w):
        return tuple(exponent_sums(w, self.presentation.alphabet))


def _rename(p, target):
    """p with its generators renamed to target's generators, by position."""
    from .core import Presentation
    src, dst = p.alphabet.generators, target.alphabet.generators
    if len(src) != len(dst):
        return p
    table = str.maketrans("".join(src) + "".join(src).upper(), "".join(dst) + "".join(dst).upper())
    return Presentation(dst, [r.translate(table) for r in p.relators], p.name)


# Unitriangular 3x3 integer matrices [[1,a,c],[0,1,b],[0,0,1]] stored as
# (a, b, c).  Product: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').

def _h_mul(g, h):
    return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])


def _h_inv(g):
    return (-g[0], -g[1], -g[2] + g[0] * g[1])


def _heis_images(z_sign):
    x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, z_sign)
    return [x, y, z]


def _heis_eval(w, images, alphabet):
    g = (0, 0, 0)
    for c in w:
        m = images[alphabet.index(c) - 1]
        g = _h_mul(g, m if c.islower() else _h_inv(m))
    return g


def _pick_heisenberg_sign():
    # choose the image of z so that every H3 relator, [x,y]z^-1 included,
    # evaluates to the identity
    p = heisenberg()
    for sign in (1, -1):
        images = _heis_images(sign)
        if all(_heis_eval(r, images, p.alphabet) == (0, 0, 0) for r in p.relators):
            return sign
    raise AssertionError("no unitriangular representation kills the H3 relators")


HEISENBERG_Z_SIGN = _pick_heisenberg_sign()


class HeisenbergOracle(WordOracle):
    variant = "HeisenbergMatrix"

    def __init__(self, presentation):
        if not _same_closure(presentation, _rename(heisenberg(), presentation)):
            raise ValueError("Heisenberg oracle needs the H3 presentation")
        super().__init__(presentation)
        self.images = _heis_images(HEISENBERG_Z_SIGN)

    def matrix(self, w):
        a, b, c = _heis_eval(w, self.images, self.presentation.alphabet)
        return [[1, a, c], [0, 1, b], [0, 0, 1]]

    def key(self, w):
        return _heis_eval(w, self.images, self.presentation.alphabet)

    def _trivial(self, w):
        return Verdict.TRIVIAL if self.key(w) == (0, 0, 0) else Verdict.NONTRIVIAL


# BS(1,2) in GL2(Q): a = [[1,1],[0,1]], b = [[1/2,0],[0,1]].  Both are
# affine maps t -> s t + c, stored as (s, c).

_BS_A = (Fraction(1), Fraction(1))
_BS_B = (Fraction(1, 2), Fraction(0))


def _aff_mul(g, h):
    return (g[0] * h[0], g[0] * h[1] + g[1])


def _aff_inv(g):
    return (1 / g[0], -g[1] / g[0])


class BS12Oracle(WordOracle):
    variant = "BS12Matrix"

    def __init__(self, presentation):
        if not _same_closure(presentation, _rename(bs12(), presentation)):
            raise ValueError("BS(1,2) matrix oracle needs the presentation <a,b | b^-1 a b a^-2>")
        super().__init__(presentation)
        self.images = [_BS_A, _BS_B]

    def key(self, w):
        g = (Fraction(1), Fraction(0))
        for c in w:
            m = self.images[self.presentation.alphabet.index(c) - 1]
            g = _aff_mul(g, m if c.islower() else _aff_inv(m))
        return g

    def matrix(self, w):
        s, c = self.key(w)
        return [[s, c], [Fraction(0), Fraction(1)]]

    def _trivial(self, w):
        return Verdict.TRIVIAL if self.key(w) == (1, 0) else Verdict.NONTRIVIAL


class DehnOracle(WordOracle):
    """Dehn's algorithm.  Only a decision procedure when the caller knows
    the presentation is a Dehn presentation."""
    variant = "DehnAlgorithm"

    def _trivial(self, w):
        from .dehn import dehn_algorithm
        res = dehn_algorithm(w, self.presentation)
        return Verdict.TRIVIAL if res.trivial else Verdict.NONTRIVIAL


class BoundedSearchOracle(WordOracle):
    """Searches the proof system for a null-sequence.  Nontriviality is only
    certified through the abelianisation; otherwise an exhausted search
    answers Unknown."""
    variant = "BoundedSearch"

    def __init__(self, presentation, budget=None):
        from ..dps import SearchBudget
        super().__init__(presentation)
        self.budget = budget or SearchBudget(max_word_len=12, max_states=20000, max_cost=16)
        self._lattice = _row_lattice([exponent_sums(r, presentation.alphabet)
                                      for r in presentation.relators], len(presentation.alphabet))
        self._cache = {}

    def _trivial(self, w):
        w = free_reduce(w)
        if w == "":
            return Verdict.TRIVIAL
        if not _in_lattice(self._lattice, exponent_sums(w, self.presentation.alphabet)):
            return Verdict.NONTRIVIAL
        if w not in self._cache:
            from ..dps import SearchBudget, reduced_area_search
            b = self.budget
            budget = SearchBudget(max(b.max_word_len, len(w)), b.max_states, b.max_cost)
            res = reduced_area_search(w, self.presentation, budget)
            self._cache[w] = Verdict.UNKNOWN if res.unknown else Verdict.TRIVIAL
        return self._cache[w]


def _row_lattice(rows, m):
    """Integer row echelon basis (Hermite style) of the lattice spanned by rows."""
    basis = []
    rows = [list(r) for r in rows if any(r)]
    col = 0
    while rows and col < m:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(m):
                    r[j] -= q * piv[j]
            nz = [r for r in nz if r[col] != 0]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        basis.append((col, piv))
        rows = [r for r in rows if r is not piv and any(r)]
        col += 1
    return basis


def _in_lattice(basis, vec):
    v = list(vec)
    for col, piv in basis:
        if v[col] % piv[col]:
            return False
        q = v[col] // piv[col]
        v = [a - q * b for a, b in zip(v, piv)]
    return not any(v)


ORACLES = {
    "free": FreeReductionOracle,
    "expsum": ExponentSumOracle,
    "heisenberg": HeisenbergOracle,
    "bs12": BS12Oracle,
    "dehn": DehnOracle,
    "search": BoundedSearchOracle,
}


def default_oracle(p):
    """The natural decisive oracle for a catalog presentation, falling back
    to bounded search."""
    for cls in (FreeReductionOracle, ExponentSumOracle, HeisenbergOracle, BS12Oracle):
        try:
            return cls(p)
        except ValueError:
            pass
    return BoundedSearchOracle(p)


def make_oracle(p, variant=None, **kw):
    if variant is None or variant == "auto":
        return default_oracle(p)
    try:
        cls = ORACLES[variant]
    except KeyError:
        raise ValueError(f"unknown oracle {variant!r}; choose from {', '.join(ORACLES)}") from None
    return cls(p, **kw)
