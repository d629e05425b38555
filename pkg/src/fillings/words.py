"""Free words over a finite alphabet.

A word is a plain ``str``: a lowercase letter is a generator and the
matching uppercase letter is its inverse, so ``"aB"`` is a b^-1.  Strings
are immutable and hash on their exact (unreduced) form, which is what the
proof-system searches need.
"""

EMPTY = ""


class WordError(ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class Alphabet:
    """Ordered generator symbols.  Letter order (used for canonical forms)
    is the generators in order followed by their inverses in order."""

    def __init__(self, generators):
        gens = list(generators)
        if not gens:
            raise ValueError("alphabet needs at least one generator")
        for g in gens:
            if len(g) != 1 or not g.isalpha() or not g.islower() or not g.isascii():
                raise ValueError(f"generator symbol must be one lowercase ASCII letter: {g!r}")
        if len(set(gens)) != len(gens):
            raise ValueError(f"repeated generator in {gens}")
        self.generators = tuple(gens)
        self.letters = self.generators + tuple(g.upper() for g in self.generators)
        self._rank = {c: i for i, c in enumerate(self.letters)}

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"Alphabet({''.join(self.generators)!r})"

    def __contains__(self, letter):
        return letter in self._rank

    def index(self, letter):
        """1-based generator index of a letter."""
        return self.generators.index(letter.lower()) + 1

    def letter_rank(self, letter):
        return self._rank[letter]

    def sort_key(self, word):
        return tuple(self._rank[c] for c in word)

    def parse(self, text):
        """Parse text into a word.  Whitespace is ignored; anything else
        outside the alphabet raises WordError carrying its position."""
        out = []
        for i, c in enumerate(text):
            if c.isspace():
                continue
            if c not in self._rank:
                raise WordError(f"symbol {c!r} at position {i} is not in the alphabet "
                                f"{''.join(self.generators)}", i)
            out.append(c)
        return "".join(out)

    def check(self, word):
        for i, c in enumerate(word):
            if c not in self._rank:
                raise WordError(f"symbol {c!r} at position {i} is not in the alphabet "
                                f"{''.join(self.generators)}", i)
        return word


def inverse_letter(c):
    return c.swapcase()


def letter(index, sign, alphabet):
    g = alphabet.generators[index - 1]
    return g if sign > 0 else g.upper()


def free_reduce(w):
    stack = []
    for c in w:
        if stack and stack[-1] == c.swapcase():
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack)


def is_reduced(w):
    return all(w[i] != w[i + 1].swapcase() for i in range(len(w) - 1))


def invert(w):
    return w[::-1].swapcase()


def rotations(w):
    """All rotations of w in order, duplicates kept."""
    if not w:
        return [EMPTY]
    return [w[i:] + w[:i] for i in range(len(w))]


def cyclic_conjugates(w):
    return set(rotations(w))


def cyclic_reduce(w):
    w = free_reduce(w)
    while len(w) >= 2 and w[0] == w[-1].swapcase():
        w = w[1:-1]
    return w


def power(w, k):
    if k < 0:
        return invert(w) * (-k)
    return w * k


def commutator(u, v):
    """[u, v] = u^-1 v^-1 u v."""
    return invert(u) + invert(v) + u + v


def conjugate(u, v):
    """u^v = v^-1 u v."""
    return invert(v) + u + v


def exponent_sums(w, alphabet):
    sums = [0] * len(alphabet)
    for c in w:
        i = alphabet.index(c) - 1
        sums[i] += 1 if c.islower() else -1
    return sums
