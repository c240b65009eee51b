import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbmis.bmatching import (
    is_g_b_matching,
    is_laminar,
    laminar_feasible,
    reduce_bmatching_to_hierarchical,
    solve_bmatching_exact,
    solve_hierarchical_exact,
)
from dbmis.errors import InvalidArgument
from dbmis.generators import gen_bmatching
from dbmis.oracles import powerset
from dbmis.pcforest import make_ecgraph

instances = st.builds(
    lambda seed, n, frac, k, mode: gen_bmatching(
        seed, n, min(6, int(frac * k * n * (n - 1) / 2)), k, 0.3, mode, 4
    ),
    st.integers(0, 2**32),
    st.integers(2, 5),
    st.floats(0, 1),
    st.integers(1, 3),
    st.sampled_from(["unit", "random"]),
)


def test_single_edge():
    g = make_ecgraph(2, [(0, 1, 0)])
    h = reduce_bmatching_to_hierarchical(g, [1, 1])
    assert h.n_vertices == 2 and h.edges == ((0, 1),)
    assert solve_bmatching_exact(g, [1, 1]) == {0}
    assert solve_bmatching_exact(g, [0, 1]) == frozenset()


def test_star_color_bound():
    g = make_ecgraph(4, [(0, 1, 0), (0, 2, 0), (0, 3, 0)], bounds={(0, 0): 2})
    h = reduce_bmatching_to_hierarchical(g, [3, 1, 1, 1])
    center = [L for L in h.family if L.vertex == 0]
    assert sorted((L.color, len(L.members), L.bound) for L in center) == [(-1, 3, 3), (0, 3, 2)]
    assert len(solve_bmatching_exact(g, [3, 1, 1, 1])) == 2
    assert len(solve_bmatching_exact(g, [1, 1, 1, 1])) == 1


def test_large_b_colors_distinct_keeps_everything():
    g = make_ecgraph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2), (0, 1, 3)])
    assert solve_bmatching_exact(g, [99, 99, 99]) == frozenset(range(4))


def test_bad_b():
    g = make_ecgraph(2, [(0, 1, 0)])
    with pytest.raises(InvalidArgument):
        reduce_bmatching_to_hierarchical(g, [1])
    with pytest.raises(InvalidArgument):
        solve_bmatching_exact(g, [1, -1])


@settings(max_examples=150, deadline=None)
@given(instances)
def test_reduction_bijection(bm):
    g, b = bm.graph, bm.b
    h = reduce_bmatching_to_hierarchical(g, b)
    assert h.n_vertices == 2 * g.m
    assert len(h.edges) == g.m
    assert is_laminar(L.members for L in h.family)
    for F in powerset(range(g.m)):
        assert laminar_feasible(h, F) == is_g_b_matching(g, b, F)
        assert h.weight_of(F) == g.weight_of(F)
    assert h.weight_of(solve_hierarchical_exact(h)) == g.weight_of(solve_bmatching_exact(g, b))


def test_is_laminar():
    assert is_laminar([{0, 1, 2}, {0}, {1, 2}])
    assert not is_laminar([{0, 1}, {1, 2}])
