import random

import pytest
from hypothesis import given, settings, strategies as st

from fillings.dps import (ApplyRelator, CyclicShift, FreeExpand, FreeReduce, NullSequence,
                          SearchBudget, area_search, coarse_fill, edge_form, ffl_search,
                          fl_search, reduced_area_search, replay)
from fillings.errors import IllegalMove
from fillings.fillfuncs import enumerate_null_words
from fillings.presentation import preset, make_oracle
from fillings.words import commutator, conjugate

from invariants import word_chain

Z2 = preset("z2")
Z2_NULL = enumerate_null_words(Z2, make_oracle(Z2), 6)


def test_replay_examples(z2, f2):
    r = replay(NullSequence("abAB", [ApplyRelator("abAB", 0)]), z2)
    assert r.null and r.stats == {"relatorCount": 1, "maxLen": 4}
    r = replay(NullSequence("xX", [FreeReduce(0)]), preset("h3"))
    assert r.null and r.stats == {"relatorCount": 0, "maxLen": 2}
    r = replay(NullSequence("aA", [FreeReduce(0)]), f2)
    assert r.null and r.stats == {"relatorCount": 0, "maxLen": 2}
    r = replay(NullSequence("abAB", [ApplyRelator("abAB", 0)]), f2)
    assert not r.valid and r.bad_move == 0


def test_move_semantics(z2):
    assert FreeExpand(1, "b").apply("aa") == "abBa"
    assert FreeReduce(1).apply("abBa") == "aa"
    with pytest.raises(IllegalMove):
        FreeReduce(0).apply("ab")
    m = ApplyRelator("abAB", 0, 1)
    assert m.u == "a" and m.v == "baB"
    assert m.apply("a", z2.closure) == "baB"
    assert CyclicShift(1).apply("abc") == "bca"


def test_serialization_round_trip(z2):
    ns = NullSequence("aabbAABB", [FreeExpand(0, "b"), ApplyRelator("abAB", 3, 2),
                                   ApplyRelator("abAB", 0), FreeReduce(0), CyclicShift(2)])
    text = ns.dumps()
    assert "R ab|AB @3" in text
    assert NullSequence.loads(text) == ns
    assert NullSequence.loads(NullSequence("", []).dumps()) == NullSequence("", [])


def _random_sequence(rng, p, steps):
    """A valid sequence built forwards from a random word by random moves."""
    closure = sorted(p.closure)
    w = "".join(rng.choice("aAbB") for _ in range(rng.randrange(5)))
    ns = NullSequence(w, [])
    for _ in range(steps):
        kind = rng.randrange(3)
        if kind == 0:
            m = FreeExpand(rng.randrange(len(w) + 1), rng.choice("aAbB"))
        elif kind == 1:
            m = ApplyRelator(rng.choice(closure), rng.randrange(len(w) + 1), 0)
        else:
            spots = [i for i in range(len(w) - 1) if w[i] == w[i + 1].swapcase()]
            if not spots:
                continue
            m = FreeReduce(rng.choice(spots))
        w = m.apply(w, p.closure)
        ns.moves.append(m)
    return ns


@given(st.integers(0, 10 ** 6), st.integers(0, 12))
def test_round_trip_random_sequences(seed, steps):
    ns = _random_sequence(random.Random(seed), Z2, steps)
    back = NullSequence.loads(ns.dumps())
    assert back == ns
    assert replay(back, Z2).words == replay(ns, Z2).words


@given(st.integers(0, 10 ** 6), st.integers(0, 12))
def test_edge_form_keeps_endpoints(seed, steps):
    ns = _random_sequence(random.Random(seed), Z2, steps)
    a, b = replay(ns, Z2), replay(edge_form(ns), Z2)
    assert b.valid
    assert b.words[-1] == a.words[-1]
    assert b.relator_count == a.relator_count
    assert all(m.cut == 1 for m in edge_form(ns).moves if isinstance(m, ApplyRelator))


def test_area_examples(z2, f2, bs):
    assert area_search("abAB", z2).value == 1
    assert area_search("aA", f2).value == 0
    r = area_search("aabbAABB", z2, SearchBudget(max_word_len=12))
    assert (r.value, r.exact) == (4, True)
    r = reduced_area_search(commutator("a", conjugate("a", "b")), bs, SearchBudget(max_word_len=12))
    assert (r.value, r.exact) == (2, True)


def test_area_unknown_when_capped(z2):
    r = area_search("aabbAABB", z2, SearchBudget(max_word_len=8, max_states=50, max_cost=8))
    assert r.unknown or not r.exact


def test_fl_examples(z2, f2):
    assert fl_search("abBA", f2).value == 4
    r = fl_search("abAB", z2)
    assert (r.value, r.exact) == (6, True)
    assert fl_search("", z2).value == 0
    r = ffl_search("abAB", z2)
    assert (r.value, r.exact) == (6, True)


def test_fl_general_cuts(z2):
    # one move deletes the whole relator when any split is allowed
    assert fl_search("abAB", z2, cuts="any").value == 4


def test_ffl_example():
    p = preset("ffl")
    from fillings.presentation import ffl_example_word
    w = ffl_example_word(1)
    b = SearchBudget(max_word_len=len(w) + 4, max_states=200_000)
    fl, ffl = fl_search(w, p, b), ffl_search(w, p, b)
    if fl.value is not None and ffl.value is not None:
        assert ffl.value <= fl.value


@pytest.mark.parametrize("w", [w for w in Z2_NULL if 0 < len(w) <= 6][::3])
def test_witnesses_replay(w):
    b = SearchBudget(max_word_len=10)
    for res in (area_search(w, Z2, b), reduced_area_search(w, Z2, b), fl_search(w, Z2, b)):
        r = replay(res.witness, Z2)
        assert r.null
    assert replay(area_search(w, Z2, b).witness, Z2).relator_count == area_search(w, Z2, b).value
    assert replay(fl_search(w, Z2, b).witness, Z2).max_len == fl_search(w, Z2, b).value


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([w for w in Z2_NULL if len(w) <= 6]))
def test_reduced_search_matches_full_search(w):
    b = SearchBudget(max_word_len=10)
    assert reduced_area_search(w, Z2, b).value == area_search(w, Z2, b).value


def test_monotone_in_budget(z2):
    w = "abbABB"
    small, big = SearchBudget(max_word_len=8), SearchBudget(max_word_len=10)
    assert area_search(w, z2, big).value <= area_search(w, z2, small).value
    assert fl_search(w, z2, big).value <= fl_search(w, z2, small).value


@pytest.mark.parametrize("w", [w for w in Z2_NULL if len(w) <= 6])
def test_chain_inequalities(w):
    b = SearchBudget(max_word_len=10)
    area = reduced_area_search(w, Z2, b).value
    fl = fl_search(w, Z2, b).value
    ffl = ffl_search(w, Z2, b).value
    assert word_chain(w, area, fl, ffl, Z2) == []


def test_coarse_fill(z2, f2, z2_oracle, f2_oracle):
    assert coarse_fill("abAB", z2, z2_oracle, 0.5, 4, 3).value == 1
    assert coarse_fill("abBA", f2, f2_oracle, 0.5, 2, 3).value == 0
    r = coarse_fill("aabbAABB", z2, z2_oracle, 0.5, 2, 4)
    assert r.value is not None and r.value <= 4
