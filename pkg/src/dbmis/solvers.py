"""Solvers that work directly on a :class:`~dbmis.instance.DbmisInstance`."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable

from ._search import best_subset
from .errors import ContractViolation, InvalidArgument
from .instance import DbmisInstance
from .parity import lift_solution, reduce_dbmis_to_parity, solve_parity_local

__all__ = [
    "DEFAULT_EXACT_CAP",
    "solve_exact",
    "solve_greedy",
    "solve_p_exchange",
    "solve_via_parity",
    "p_for_epsilon",
    "p_exchange_bound",
    "greedy_bound",
]

DEFAULT_EXACT_CAP = 20


def solve_exact(inst: DbmisInstance, cap: int = DEFAULT_EXACT_CAP) -> frozenset[int]:
    """Maximum-weight feasible set by depth-first enumeration.

    Feasible sets are downward closed, so an infeasible prefix ends its
    branch.  Ties resolve to the lexicographically smallest id tuple.
    """
    ground = inst.ground
    w = [inst.weight(x) for x in ground]
    return frozenset(best_subset(ground, w, inst.is_feasible, cap))


def solve_greedy(inst: DbmisInstance) -> frozenset[int]:
    """Add elements by descending weight (ties by id) whenever feasibility survives."""
    chosen: set[int] = set()
    for x in sorted(inst.ground, key=lambda x: (-inst.weight(x), x)):
        chosen.add(x)
        if not inst.is_feasible(chosen):
            chosen.discard(x)
    return frozenset(chosen)


def _min_removal(inst: DbmisInstance, current: frozenset[int], add: tuple[int, ...]) -> frozenset[int] | None:
    """Cheapest R with ``(current - R) | add`` feasible, or None if ``add`` alone is infeasible.

    Only valid for unit bounds: every hyperedge touched by ``add`` must lose
    all of its current elements, and what remains is a pure matroid problem,
    which greedy (heaviest first, ``add`` kept) solves with both minimum size
    and minimum weight.
    """
    if not inst.is_feasible(add):
        return None
    inc = inst.hyper.incidence
    hyperedges = inst.hyperedges
    forced: set[int] = set()
    for x in add:
        for j in inc[x]:
            forced |= hyperedges[j] & current
    keep = set(add)
    indep = inst.matroid._independent
    for y in sorted(current - forced, key=lambda y: (-inst.weight(y), y)):
        keep.add(y)
        if not indep(frozenset(keep)):
            keep.discard(y)
    return frozenset(current - keep)


def solve_p_exchange(
    inst: DbmisInstance,
    p: int,
    max_remove: int | None = None,
    start: Iterable[int] | None = None,
) -> frozenset[int]:
    """p-exchange local search for unit-bound instances, seeded by greedy.

    A move adds ``A`` (``1 <= |A| <= p``, disjoint from the current set) and
    removes ``R`` with ``|R| <= max_remove`` (default ``p * Delta + 1``); it is
    accepted when the result is feasible and strictly heavier.  For each
    candidate ``A`` (scanned by descending weight, then id) the cheapest
    feasible ``R`` is computed exactly, so the scan is equivalent to trying
    every removal set smallest-first.

    With ``p = ceil(1/eps)`` a local optimum is within ``1/(Delta + eps)``
    of the optimum.
    """
    if p < 1:
        raise InvalidArgument("p must be at least 1")
    if not inst.has_unit_bounds:
        raise InvalidArgument("p-exchange search requires every hyperedge bound to be at most 1")
    if max_remove is None:
        max_remove = p * inst.degree + 1
    current = frozenset(solve_greedy(inst) if start is None else start)
    if not inst.is_feasible(current):
        raise ContractViolation("local search start is infeasible")
    order = sorted(inst.ground, key=lambda x: (-inst.weight(x), x))
    while True:
        move = _find_p_exchange(inst, current, order, p, max_remove)
        if move is None:
            return current
        add, remove = move
        current = (current - remove) | frozenset(add)


def _find_p_exchange(inst, current, order, p, max_remove):
    outside = [x for x in order if x not in current]
    for size in range(1, p + 1):
        for add in itertools.combinations(outside, size):
            remove = _min_removal(inst, current, add)
            if remove is None or len(remove) > max_remove:
                continue
            if inst.weight_of(remove) < inst.weight_of(add):
                return add, remove
    return None


def solve_via_parity(inst: DbmisInstance, t: int, max_remove: int | None = None) -> frozenset[int]:
    """Reduce to matroid (Delta+1)-parity, run bounded-exchange search, lift back."""
    cert = reduce_dbmis_to_parity(inst)
    chosen = solve_parity_local(cert.target, t, max_remove=max_remove)
    return lift_solution(cert, chosen)


def p_for_epsilon(eps: float | Fraction) -> int:
    """Exchange size that yields a ``1/(Delta + eps)`` guarantee."""
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidArgument("eps must be positive")
    return math.ceil(1 / eps)


def p_exchange_bound(delta: int, p: int) -> Fraction:
    """Guaranteed ratio ``1/(Delta + 1/p)`` for a p-exchange local optimum.

    For ``Delta = 0`` the instance is a single matroid where any 1-exchange
    optimum is exact, so the ratio is taken as 1.
    """
    if delta == 0:
        return Fraction(1)
    return 1 / (delta + Fraction(1, p))


def greedy_bound(delta: int) -> Fraction:
    """``1/(Delta+1)``, the k-extendible greedy guarantee with ``k = Delta + 1``."""
    return Fraction(1, delta + 1)
