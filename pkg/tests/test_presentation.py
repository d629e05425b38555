import itertools
from fractions import Fraction

import pytest

from fillings.presentation import (BoundedSearchOracle, ExponentSumOracle, FreeReductionOracle,
                                   HeisenbergOracle, Presentation, Verdict, BS12Oracle,
                                   cayley_ball, dehn_algorithm, fatten, four_point_delta,
                                   l_delta_check, make_oracle, preset)
from fillings.dps import SearchBudget, replay
from fillings.words import commutator, free_reduce, is_reduced


def test_file_round_trip(tmp_path):
    p = preset("bs12")
    path = tmp_path / "bs.txt"
    path.write_text("# BS(1,2)\ngens: a b\n\nrel: BabAA\n")
    q = Presentation.load(path)
    assert q == p
    assert Presentation.loads(p.dumps()) == p


def test_file_rejects_bad_relator():
    with pytest.raises(ValueError):
        Presentation.loads("gens: a b\nrel: abx\n")


def test_closure_contents(z2):
    assert "abAB" in z2.closure
    assert "ABab" in z2.closure
    assert len(z2.closure) == 8


def test_fatten():
    p = fatten(preset("z2"))
    assert p.generators == ("a", "b", "z")
    assert {"z", "zz", "zzz", "zZ", "zzZ", "zaZA", "zbZB"} <= set(p.relators)


def test_catalog_relators_trivial():
    for name, cls in [("h3", HeisenbergOracle), ("bs12", BS12Oracle), ("z3", ExponentSumOracle)]:
        p = preset(name)
        o = cls(p)
        assert all(o.decide(r) for r in p.relators)


def test_heisenberg_commutator():
    o = HeisenbergOracle(preset("h3"))
    assert o.decide("XYxyZ")
    assert not o.decide("xy")
    assert o.matrix("z") == o.matrix("XYxy")


def test_bs12_matrix():
    o = BS12Oracle(preset("bs12"))
    assert o.decide(commutator("a", "Bab"))
    assert not o.decide("ab")
    assert o.matrix("a") == [[1, 1], [0, 1]]
    assert o.matrix("b") == [[Fraction(1, 2), 0], [0, 1]]


def test_free_oracle(f2):
    o = FreeReductionOracle(f2)
    assert o.is_trivial("abBA") is Verdict.TRIVIAL
    assert o.is_trivial("ab") is Verdict.NONTRIVIAL


def test_oracle_mismatch():
    with pytest.raises(ValueError):
        ExponentSumOracle(preset("bs12"))
    with pytest.raises(ValueError):
        make_oracle(preset("z2"), "nonsense")


def test_exponent_sum_agrees_with_bounded_search(z2):
    e = ExponentSumOracle(z2)
    b = BoundedSearchOracle(z2, SearchBudget(max_word_len=10, max_states=5000, max_cost=10))
    for n in range(7):
        for t in itertools.product("aAbB", repeat=n):
            w = "".join(t)
            v = b.is_trivial(w)
            assert v is not Verdict.UNKNOWN
            assert v is e.is_trivial(w)


def test_dehn_algorithm_free(f2):
    res = dehn_algorithm("abBA", f2)
    assert res.trivial and res.replacements == 0
    assert replay(res.sequence, f2).null


def test_dehn_algorithm_stuck_on_z2(z2):
    res = dehn_algorithm("aabbAABB", z2)
    assert not res.trivial
    assert res.decision == "Stuck"


def test_ball_sizes(f2, z2, f2_oracle, z2_oracle):
    assert len(cayley_ball(f2, f2_oracle, 2)) == 17
    assert len(cayley_ball(z2, z2_oracle, 2)) == 13
    ball = cayley_ball(z2, z2_oracle, 3)
    assert ball.metric("", "aba") == 3
    assert ball.word_length("abAB") == 0
    assert ball.canonical("ba") == ball.canonical("ab")


def test_ball_vertices_reduced(bs):
    ball = cayley_ball(bs, make_oracle(bs), 3)
    assert all(is_reduced(v) for v in ball.vertices)
    assert all(free_reduce(v) == v for v in ball.vertices)


def test_hyperbolicity_probes(f2, z2, f2_oracle, z2_oracle):
    assert four_point_delta(cayley_ball(f2, f2_oracle, 2)) == 0
    assert four_point_delta(cayley_ball(z2, z2_oracle, 2), strict=True) >= 0
    assert l_delta_check(cayley_ball(z2, z2_oracle, 2), 0)
    assert l_delta_check(cayley_ball(f2, f2_oracle, 2), 0)
