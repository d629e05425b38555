import random

import pytest
from hypothesis import given, settings, strategies as st

from fillings.diagram import (Diagram, DiagramError, Graph, NotSpanning,
                              Shelling, arc, boundary_word, check, count_spanning_trees, dgl,
                              diagram_to_sequence, ediam, from_faces, geodesic_spanning_tree,
                              grid, idiam, measure, polygon, sequence_to_diagram, shell_fl,
                              shelling_max, spanning_trees, square, tree_following_bound,
                              tree_pair, vertex)
from fillings.dps import (ApplyRelator, FreeReduce, NullSequence, SearchBudget, area_search,
                          edge_form, replay)
from fillings.fillfuncs import enumerate_null_words
from fillings.presentation import cayley_ball, make_oracle, preset

from invariants import diagram_chain

Z2 = preset("z2")
Z2_NULL = [w for w in enumerate_null_words(Z2, make_oracle(Z2), 6) if w]


def test_boundary_words():
    assert boundary_word(square()) == "abAB"
    assert boundary_word(arc("a")) == "aA"
    assert boundary_word(vertex()) == ""
    assert boundary_word(grid(2, 2)) == "aabbAABB"


def test_check(z2, f2):
    assert check(square(), z2)
    assert not check(square(), f2)
    assert check(vertex(), f2) and check(vertex(), z2)
    assert check(grid(2, 3), z2)


def test_measure_examples():
    assert measure(square()) == {"area": 1, "idiam": 2, "rad": 0, "gl": 1}
    assert measure(grid(2, 2)) == {"area": 4, "idiam": 4, "rad": 1, "gl": 2}
    assert measure(vertex()) == {"area": 0, "idiam": 0, "rad": 0, "gl": 0}


def test_ediam(z2, z2_oracle, f2, f2_oracle):
    ball = cayley_ball(z2, z2_oracle, 4)
    assert ediam(square(), ball) == 2
    assert ediam(vertex(), ball) == 0
    fball = cayley_ball(f2, f2_oracle, 3)
    d = sequence_to_diagram(NullSequence("abBA", [FreeReduce(1), FreeReduce(0)]), f2)
    assert ediam(d, fball) == idiam(d)


def test_tree_pair_square():
    d = square()
    skel = d.skeleton()
    for tree in spanning_trees(skel):
        pair = tree_pair(d, tree)
        assert len(pair.tree) == 3 and len(pair.dual_tree) == 1
        u, v = d.dual().edges[pair.dual_tree[0]]
        assert {u, v} == {0, 1}
    p = tree_pair(vertex(), [])
    assert p.tree == [] and p.dual_tree == []


def test_tree_pair_rejects_non_tree():
    with pytest.raises(NotSpanning):
        tree_pair(square(), [0, 1])


def test_tree_pair_grid_comb():
    d = grid(2, 2)
    skel = d.skeleton()
    horizontal = [e for e, (u, v) in enumerate(skel.edges) if d.label[2 * e] == "a"]
    # horizontal rows plus the leftmost vertical column
    left = [e for e, (u, v) in enumerate(skel.edges)
            if d.label[2 * e] == "b" and min(u, v) % 3 == 0]
    pair = tree_pair(d, horizontal + left)
    assert len(pair.dual_tree) == 4
    dual = d.dual()
    assert Graph(dual.n, [dual.edges[e] for e in pair.dual_tree]).connected()


def test_dgl():
    assert dgl(square()).value == 4
    assert dgl(vertex()).value == 0
    d = grid(2, 2)
    assert count_spanning_trees(d.skeleton()) == 192
    exact = dgl(d)
    assert exact.trees == 192
    assert dgl(d, "heuristic").value >= exact.value
    assert exact.value >= measure(d)["gl"]


def test_geodesic_tree():
    c4 = polygon("abab")
    t = geodesic_spanning_tree(c4, 0)
    g = Graph(4, [c4.skeleton().edges[e] for e in t])
    assert g.bfs(0) == c4.skeleton().bfs(0)
    assert sorted(g.bfs(0)) == [0, 1, 1, 2]
    assert geodesic_spanning_tree(vertex(), 0) == []


def test_shell_fl():
    r = shell_fl(square())
    assert (r.value, r.exact) == (6, True)
    assert shelling_max(square(), r.shelling) == 6
    assert shell_fl(vertex()).value == 0
    d = grid(2, 2)
    exact, upper = shell_fl(d), shell_fl(d, "upper")
    assert exact.value <= upper.value


def test_diagram_to_sequence(z2):
    r = shell_fl(square())
    ns = diagram_to_sequence(square(), r.shelling)
    out = replay(ns, z2)
    assert out.null and out.stats == {"relatorCount": 1, "maxLen": 6}
    ns = diagram_to_sequence(vertex(), Shelling())
    assert ns.start == "" and ns.moves == []


def test_sequence_to_diagram(z2, f2):
    d = sequence_to_diagram(NullSequence("abAB", [ApplyRelator("abAB", 0)]), z2)
    assert (d.area, boundary_word(d)) == (1, "abAB")
    d = sequence_to_diagram(NullSequence("aA", [FreeReduce(0)]), f2)
    assert (d.area, d.n_edges, boundary_word(d)) == (0, 1, "aA")
    res = area_search("aabbAABB", z2, SearchBudget(max_word_len=12))
    d = sequence_to_diagram(res.witness, z2)
    assert d.area <= 4 and check(d, z2) and boundary_word(d) == "aabbAABB"


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(Z2_NULL))
def test_bridge_round_trip(w):
    res = area_search(w, Z2, SearchBudget(max_word_len=10))
    d = sequence_to_diagram(res.witness, Z2)
    assert boundary_word(d) == w and check(d, Z2) and d.euler() == 2
    assert d.area <= res.value
    fl = shell_fl(d)
    # shellings only see edge-form moves (one edge of a cell at a time)
    assert fl.value <= replay(edge_form(res.witness), Z2).max_len
    back = diagram_to_sequence(d, fl.shelling)
    r = replay(back, Z2)
    assert r.null and r.relator_count == d.area and r.max_len == fl.value


def test_from_faces():
    d = from_faces(4, [[0, 1, 2, 3]])
    assert d.area == 1 and len(d.circuit()) == 4 and d.euler() == 2
    d = from_faces(6, [[0, 1, 4, 3], [1, 2, 5, 4]])
    assert d.area == 2 and len(d.circuit()) == 6
    with pytest.raises(DiagramError):
        from_faces(4, [[0, 1, 2], [0, 1, 3], [0, 1, 2, 3]])


@given(st.integers(1, 4), st.integers(1, 4))
def test_grid_serialization(rows, cols):
    d = grid(rows, cols)
    e = Diagram.loads(d.dumps())
    assert e.dumps() == d.dumps()
    assert boundary_word(e) == boundary_word(d)
    assert d.euler() == 2 and d.area == rows * cols


@pytest.mark.parametrize("rows,cols", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_grid_invariants(rows, cols, z2, z2_oracle):
    d = grid(rows, cols)
    ball = cayley_ball(z2, z2_oracle, rows + cols)
    fl = shell_fl(d).value
    pairs = [tree_pair(d, t) for t in random.Random(rows * 7 + cols).sample(
        list(spanning_trees(d.skeleton())), 3)] if rows * cols <= 4 else \
        [tree_pair(d, geodesic_spanning_tree(d, d.star))]
    value = dgl(d).value if rows * cols <= 4 else None
    assert diagram_chain(d, 2, 4, ball, fl, pairs, value) == []
    for pair in pairs:
        assert fl <= tree_following_bound(d, pair)
