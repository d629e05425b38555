import pytest
from hypothesis import given, strategies as st

from fillings.combing import (bs12_normal_form, cockleshell, cockleshell_bound,
                              fellow_traveler_check, in_bs12_language, length_function,
                              standard_combing)
from fillings.diagram import boundary_word, check, shell_fl
from fillings.presentation import cayley_ball, make_oracle, preset

BS = preset("bs12")
BS_ORACLE = make_oracle(BS)
words = st.text("aAbB", max_size=10)


def test_bs12_rules():
    assert bs12_normal_form("ab") == "baa"
    assert bs12_normal_form("aA") == ""
    nf = bs12_normal_form("bAB")
    assert BS_ORACLE.equal(nf, "bAB") and in_bs12_language(nf)


@given(words)
def test_bs12_normal_form(w):
    nf = bs12_normal_form(w)
    assert BS_ORACLE.equal(nf, w)
    assert in_bs12_language(nf)
    assert bs12_normal_form(nf) == nf


@pytest.fixture(scope="module")
def balls():
    out = {}
    for name in ("f2", "z2", "bs12"):
        p = preset(name)
        out[name] = cayley_ball(p, make_oracle(p), 3)
    return out


def test_z2_normal_form(balls):
    c = standard_combing("zm", balls["z2"])
    assert c.sigma("aba") == "aab"
    assert c.sigma("BA") == "AB"


def test_free_normal_form(balls):
    c = standard_combing("free", balls["f2"])
    for i, g in enumerate(balls["f2"].vertices):
        assert c.normal_form[i] == g


def test_bs12_combing_language(balls):
    c = standard_combing("bs12", balls["bs12"])
    assert all(in_bs12_language(s) for s in c.normal_form.values())


def test_fellow_travelling(balls):
    assert fellow_traveler_check(standard_combing("free", balls["f2"]))["syncK"] == 1
    assert fellow_traveler_check(standard_combing("zm", balls["z2"]))["syncK"] == 2
    # BS(1,2) normal forms leave the radius-3 ball, so measure in a larger one
    p = preset("bs12")
    r = fellow_traveler_check(standard_combing("bs12", balls["bs12"]),
                              metric_ball=cayley_ball(p, make_oracle(p), 8))
    assert r["asyncK"] <= r["syncK"]


def test_length_function(balls):
    for name, kind in (("f2", "free"), ("z2", "zm")):
        c = standard_combing(kind, balls[name])
        assert [length_function(c, n) for n in range(4)] == [0, 1, 2, 3]
    c = standard_combing("bs12", balls["bs12"])
    ls = [length_function(c, n) for n in range(4)]
    assert ls == sorted(ls) and ls[3] > 3


def test_cockleshell_commutator(z2, z2_oracle):
    c = standard_combing("zm", cayley_ball(z2, z2_oracle, 4))
    d = cockleshell("abAB", c)
    assert boundary_word(d) == "abAB" and check(d, d.ladder) and d.euler() == 2
    assert d.area <= cockleshell_bound("abAB", c) == 16


def test_cockleshell_free(f2, f2_oracle):
    c = standard_combing("free", cayley_ball(f2, f2_oracle, 2))
    d = cockleshell("aA", c)
    assert d.area == 0 and boundary_word(d) == "aA"


def test_cockleshell_square_commutator(z2, z2_oracle):
    c = standard_combing("zm", cayley_ball(z2, z2_oracle, 6))
    w = "aabbAABB"
    d = cockleshell(w, c)
    assert check(d, d.ladder) and boundary_word(d) == w
    assert d.area <= cockleshell_bound(w, c) == 64
    up = shell_fl(d, "upper")
    assert up.bound is None or up.value <= up.bound
