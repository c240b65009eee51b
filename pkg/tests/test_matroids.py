import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbmis.errors import InvalidArgument
from dbmis.matroids import (
    is_independent,
    make_copy,
    make_direct_sum,
    make_free,
    make_graphic,
    make_partition,
    make_restriction,
    make_uniform,
    rank,
)
from dbmis.oracles import has_cycle_dfs, matroid_axiom_failures, powerset, rank_failures

K4 = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]


def test_triangle_graphic():
    m = make_graphic(3, [(0, 1), (1, 2), (0, 2)])
    assert m.is_independent({0, 1})
    assert not m.is_independent({0, 1, 2})
    assert m.rank() == 2


def test_four_cycle_with_chord_dependent():
    m = make_graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not m.is_independent(range(5))
    assert has_cycle_dfs(m.edges)


def test_direct_sum_rank_matches_enumeration():
    m = make_direct_sum([make_uniform(1, [1, 2]), make_free([3])])
    best = max(len(s) for s in powerset([1, 2, 3]) if m.is_independent(s))
    assert rank(m, {1, 2, 3}) == best == 2


def test_partition_leaves_uncovered_free():
    m = make_partition([[0, 1]], [1], ground=[0, 1, 2, 3])
    assert m.is_independent({0, 2, 3})
    assert not m.is_independent({0, 1})


def test_restriction_and_copy():
    g = make_graphic(3, [(0, 1), (1, 2), (0, 2)])
    r = make_restriction(g, [0, 1])
    assert r.ground == (0, 1) and r.is_independent({0, 1})
    c = make_copy(g, {0: 10, 1: 11, 2: 12})
    assert c.ground == (10, 11, 12)
    assert not c.is_independent({10, 11, 12})
    assert is_independent(c, {10, 12})


def test_nested_sums_flatten():
    inner = make_direct_sum([make_free([0]), make_free([1])])
    outer = make_direct_sum([inner, make_uniform(0, [2])])
    assert len(outer.children) == 3


@pytest.mark.parametrize(
    "build",
    [
        lambda: make_graphic(2, [(0, 0)]),
        lambda: make_graphic(2, [(0, 2)]),
        lambda: make_uniform(-1, [0]),
        lambda: make_partition([[0, 1], [1]], [1, 1]),
        lambda: make_direct_sum([make_free([0]), make_free([0])]),
    ],
)
def test_bad_construction(build):
    with pytest.raises(InvalidArgument):
        build()


def test_unknown_id_rejected():
    with pytest.raises(InvalidArgument):
        make_free([0, 1]).is_independent({5})


MATROIDS = {
    "graphic-k4": lambda: make_graphic(4, K4),
    "graphic-multi": lambda: make_graphic(3, [(0, 1), (0, 1), (1, 2), (0, 2), (1, 2)]),
    "uniform": lambda: make_uniform(2, range(6)),
    "free": lambda: make_free(range(5)),
    "partition": lambda: make_partition([[0, 1, 2], [3, 4]], [2, 1], ground=range(7)),
    "sum": lambda: make_direct_sum([make_uniform(1, [0, 1, 2]), make_graphic(3, [(0, 1), (1, 2), (0, 2)], ids=[3, 4, 5])]),
    "restriction": lambda: make_restriction(make_graphic(4, K4), [0, 1, 2, 4]),
    "copy": lambda: make_copy(make_uniform(2, [0, 1, 2, 3]), {0: 7, 1: 5, 2: 9, 3: 4}),
}


@pytest.mark.parametrize("name", sorted(MATROIDS))
def test_axioms_and_rank(name):
    m = MATROIDS[name]()
    assert matroid_axiom_failures(m) == []
    assert rank_failures(m) == []


edge_lists = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda e: e[0] != e[1]), max_size=8
)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_graphic_matches_dfs(edges):
    m = make_graphic(5, edges)
    for s in powerset(range(len(edges))):
        assert m.is_independent(s) == (not has_cycle_dfs([edges[j] for j in s]))


@settings(max_examples=60, deadline=None)
@given(edge_lists.filter(lambda es: len(es) <= 6))
def test_random_graphic_axioms(edges):
    assert matroid_axiom_failures(make_graphic(5, edges)) == []
