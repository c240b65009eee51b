from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbmis.errors import InvalidArgument, ResourceLimit
from dbmis.generators import gen_dbmis
from dbmis.instance import make_instance
from dbmis.matroids import make_free, make_graphic, make_uniform
from dbmis.oracles import brute_force_max
from dbmis.solvers import (
    greedy_bound,
    p_exchange_bound,
    p_for_epsilon,
    solve_exact,
    solve_greedy,
    solve_p_exchange,
    solve_via_parity,
)


def opt(inst):
    return brute_force_max(inst.ground, [inst.weight(x) for x in inst.ground], inst.is_feasible)[0]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 3), st.booleans())
def test_exact_matches_unpruned(seed, max_deg, unit):
    inst = gen_dbmis(seed, 8, max_deg, unit_bounds=unit, max_weight=7)
    out = solve_exact(inst)
    assert inst.is_feasible(out)
    assert inst.weight_of(out) == opt(inst)


def test_exact_cap():
    with pytest.raises(ResourceLimit):
        solve_exact(make_instance(make_free(range(5))), cap=4)


def test_greedy_bound_over_many():
    for seed in range(100):
        inst = gen_dbmis(seed, 8, seed % 4)
        g = solve_greedy(inst)
        assert inst.is_feasible(g)
        assert (inst.degree + 1) * len(g) >= len(solve_exact(inst))


def test_p_exchange_star_escape():
    # greedy takes the heavy centre; a 2-exchange swaps in the two leaves
    inst = make_instance(make_free(range(3)), [[0, 1], [0, 2]], weights={0: 3, 1: 2, 2: 2})
    assert solve_greedy(inst) == {0}
    assert solve_p_exchange(inst, 1) == {0}
    assert solve_p_exchange(inst, 2) == {1, 2}


def test_p_exchange_respects_matroid():
    m = make_graphic(3, [(0, 1), (1, 2), (0, 2)])
    inst = make_instance(m, [[0, 1]], weights={0: 1, 1: 1, 2: 1})
    out = solve_p_exchange(inst, 2)
    assert inst.is_feasible(out) and len(out) == 2


@pytest.mark.parametrize("p", [0, -1])
def test_p_exchange_bad_p(p):
    with pytest.raises(InvalidArgument):
        solve_p_exchange(make_instance(make_free([0])), p)


def test_p_exchange_needs_unit_bounds():
    with pytest.raises(InvalidArgument):
        solve_p_exchange(make_instance(make_free([0, 1]), [[0, 1]], [2]), 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 9), st.integers(1, 3), st.integers(1, 3))
def test_p_exchange_bound_holds(seed, n, max_deg, p):
    inst = gen_dbmis(seed, n, max_deg, max_weight=9)
    out = solve_p_exchange(inst, p)
    assert inst.is_feasible(out)
    assert Fraction(inst.weight_of(out)) >= p_exchange_bound(inst.degree, p) * opt(inst)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7), st.integers(0, 3), st.integers(1, 2))
def test_via_parity(seed, n, max_deg, t):
    inst = gen_dbmis(seed, n, max_deg, unit_bounds=False, max_weight=5)
    out = solve_via_parity(inst, t)
    assert inst.is_feasible(out)
    assert inst.weight_of(out) >= inst.weight_of(solve_greedy(inst))


def test_bound_helpers():
    assert p_for_epsilon(Fraction(1, 3)) == 3
    assert p_for_epsilon(0.4) == 3
    assert p_for_epsilon(1) == 1
    with pytest.raises(InvalidArgument):
        p_for_epsilon(0)
    assert p_exchange_bound(2, 1) == Fraction(1, 3)
    assert p_exchange_bound(2, 2) == Fraction(2, 5)
    assert p_exchange_bound(0, 1) == 1
    assert greedy_bound(3) == Fraction(1, 4)


def test_uniform_instance_exact():
    inst = make_instance(make_uniform(2, range(4)), weights={0: 1, 1: 5, 2: 3, 3: 5})
    assert solve_exact(inst) == {1, 3}
