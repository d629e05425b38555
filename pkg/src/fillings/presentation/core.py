from functools import cached_property
from itertools import product

from ..words import Alphabet, WordError, commutator, conjugate, invert, rotations


class Presentation:
    """A finite presentation <X | R>.  Relators are kept verbatim, even
    when they are not freely reduced."""

    def __init__(self, generators, relators=(), name=None):
        self.alphabet = generators if isinstance(generators, Alphabet) else Alphabet(generators)
        rels = []
        for r in relators:
            r = self.alphabet.parse(r)
            if not r:
                raise ValueError("empty relator")
            rels.append(r)
        self.relators = tuple(rels)
        self.name = name

    def __repr__(self):
        gens = ",".join(self.alphabet.generators)
        return f"<{gens} | {', '.join(self.relators)}>" + (f" [{self.name}]" if self.name else "")

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.alphabet == other.alphabet
                and self.relators == other.relators)

    def __hash__(self):
        return hash((self.alphabet, self.relators))

    @property
    def generators(self):
        return self.alphabet.generators

    @cached_property
    def closure(self):
        return relator_closure(self)

    @cached_property
    def max_relator_length(self):
        """B: the longest relator length (0 when there are no relators)."""
        return max((len(r) for r in self.relators), default=0)

    @property
    def space_constant(self):
        """K = 2|X| + 1."""
        return 2 * len(self.alphabet) + 1

    def parse(self, text):
        return self.alphabet.parse(text)

    def dumps(self):
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        lines.append("gens: " + " ".join(self.alphabet.generators))
        lines += [f"rel: {r}" for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text, name=None):
        gens, rels = None, []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition(":")
            key = key.strip()
            if key == "gens" and gens is None:
                gens = value.split()
            elif key == "rel" and gens is not None:
                rels.append(value.strip())
            else:
                raise ValueError(f"line {lineno}: expected 'gens:' first, then 'rel:' lines")
        if gens is None:
            raise ValueError("missing 'gens:' line")
        alphabet = Alphabet(gens)
        for r in rels:
            try:
                alphabet.parse(r)
            except WordError as e:
                raise ValueError(f"bad relator {r!r}: {e}") from None
        return cls(alphabet, rels, name)

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as f:
            return cls.loads(f.read(), name=str(path))


def relator_closure(p):
    """All rotations of every relator and of its inverse."""
    out = set()
    for r in p.relators:
        out.update(rotations(r))
        out.update(rotations(invert(r)))
    return frozenset(out)


def fatten(p, symbol="z"):
    """Add a spurious generator z with relators z, z^2, z^3, z z^-1,
    z^2 z^-1 and one commutator with each old generator."""
    if symbol in p.alphabet.generators or symbol.upper() in p.alphabet:
        raise ValueError(f"generator {symbol!r} already present")
    Z = symbol.upper()
    gens = list(p.alphabet.generators) + [symbol]
    extra = [symbol, symbol * 2, symbol * 3, symbol + Z, symbol * 2 + Z]
    extra += [symbol + x + Z + x.upper() for x in p.alphabet.generators]
    name = f"fat({p.name})" if p.name else None
    return Presentation(gens, list(p.relators) + extra, name)


# -- catalog --------------------------------------------------------------

LETTERS = "abcdefghijklmnopqrstuvw"


def free_group(m):
    return Presentation(LETTERS[:m], [], f"F{m}")


def free_abelian(m):
    gens = LETTERS[:m]
    rels = [commutator(gens[i], gens[j]) for i in range(m) for j in range(i + 1, m)]
    return Presentation(gens, rels, f"Z{m}")


def z3_figure():
    return Presentation("abc", [commutator("a", "b"), commutator("b", "c"),
                                commutator("c", "a")], "Z3")


def bs12():
    # b^-1 a b a^-2
    return Presentation("ab", ["BabAA"], "BS(1,2)")


def heisenberg():
    # [x,y] z^-1, [x,z], [y,z]
    return Presentation("xyz", [commutator("x", "y") + "Z", commutator("x", "z"),
                                commutator("y", "z")], "H3")


def bridson():
    return Presentation("xyst", [commutator("x", "y"), conjugate("x", "t") + "XX",
                                 conjugate("y", "s") + "YY"], "Bridson")


def baumslag_gersten():
    return Presentation("ab", [conjugate("a", conjugate("a", "b")) + "AA"], "Baumslag-Gersten")


def ffl_example():
    # The two symbols written T and tau in the source are renamed u and v,
    # since an uppercase letter already means an inverse here.
    return Presentation("abtuv", ["BabAA", commutator("t", "a"), commutator("v", "at"),
                                  commutator("u", "t"), commutator("v", "u")], "FFL-example")


def ffl_example_word(n):
    """[u, a^{-b^n} v a^{b^n}] in the FFL example presentation."""
    g = conjugate("v", conjugate("a", "b" * n))
    return commutator("u", g)


PRESETS = {
    "bs12": bs12,
    "h3": heisenberg,
    "bridson": bridson,
    "bg": baumslag_gersten,
    "ffl": ffl_example,
    "z3": z3_figure,
}


def preset(name):
    name = name.lower()
    if name in PRESETS:
        return PRESETS[name]()
    if len(name) >= 2 and name[0] in "fz" and name[1:].isdigit():
        m = int(name[1:])
        if 1 <= m <= len(LETTERS):
            return free_group(m) if name[0] == "f" else free_abelian(m)
    raise KeyError(f"unknown preset {name!r}; try f2, z2, z3, bs12, h3, bridson, bg, ffl")


def preset_names():
    return ["f<m>", "z<m>"] + sorted(PRESETS)


def short_null_presentation(p, oracle, bound, name=None):
    """The presentation on the same generators whose relators are all null
    words of length <= bound (as decided by the oracle)."""
    rels = []
    letters = p.alphabet.letters
    for n in range(1, bound + 1):
        for t in product(letters, repeat=n):
            w = "".join(t)
            if oracle.decide(w):
                rels.append(w)
    return Presentation(p.alphabet, rels, name or f"null<={bound}")
