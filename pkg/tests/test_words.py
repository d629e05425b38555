import pytest
from hypothesis import given, strategies as st

from fillings.words import (Alphabet, WordError, commutator, conjugate, cyclic_reduce,
                            exponent_sums, free_reduce, invert, is_reduced, rotations)

words = st.text(alphabet="aAbBcC", max_size=14)


def test_parse_reports_position():
    ab = Alphabet("ab")
    assert ab.parse("abAB") == "abAB"
    with pytest.raises(WordError) as e:
        ab.parse("abxB")
    assert e.value.position == 2


def test_alphabet_rejects_bad_symbols():
    with pytest.raises(ValueError):
        Alphabet("aA")
    with pytest.raises(ValueError):
        Alphabet("aa")


def test_commutator_convention():
    assert commutator("a", "b") == "ABab"
    assert conjugate("a", "b") == "Bab"


def test_examples():
    assert free_reduce("abBA") == ""
    assert free_reduce("aabAB") == "aabAB"
    assert invert("abC") == "cBA"
    assert cyclic_reduce("bacB") == "ac"
    assert sorted(rotations("abc")) == ["abc", "bca", "cab"]
    assert exponent_sums("aaBAb", Alphabet("ab")) == [1, 0]


@given(words)
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert is_reduced(r)
    assert free_reduce(r) == r


@given(words)
def test_invert_involution(w):
    assert invert(invert(w)) == w
    assert free_reduce(w + invert(w)) == ""


@given(words, words)
def test_reduce_respects_products(u, v):
    assert free_reduce(u + v) == free_reduce(free_reduce(u) + free_reduce(v))


@given(words)
def test_exponent_sums_survive_reduction(w):
    ab = Alphabet("abc")
    assert exponent_sums(w, ab) == exponent_sums(free_reduce(w), ab)
