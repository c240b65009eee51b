"""Matroid k-parity: instances, the reduction from Max-WDBMIS, and two solvers.

The reduction builds, for every source element ``v``, a parity set made of
one copy of ``v`` in a copy of the source matroid, one copy per hyperedge
containing ``v`` (each hyperedge becomes a uniform matroid of rank ``g(e)``
over its copies), and enough free dummies to pad the set to ``Delta + 1``
elements.  Feasible source sets and feasible parity subcollections are then
in weight-preserving bijection; :func:`push_solution` and
:func:`lift_solution` are the two directions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from ._search import best_subset
from .errors import ContractViolation, InvalidArgument
from .instance import DbmisInstance
from .matroids import Matroid, make_copy, make_direct_sum, make_free, make_uniform

__all__ = [
    "ParityInstance",
    "CopyRole",
    "ReductionCertificate",
    "reduce_dbmis_to_parity",
    "lift_solution",
    "push_solution",
    "solve_parity_exact",
    "solve_parity_greedy",
    "solve_parity_local",
    "DEFAULT_PARITY_CAP",
]

DEFAULT_PARITY_CAP = 20


@dataclass(frozen=True)
class ParityInstance:
    matroid: Matroid
    parity_sets: tuple[tuple[int, ...], ...]
    k: int
    set_weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.parity_sets) != len(self.set_weights):
            raise InvalidArgument("one weight per parity set required")
        seen: set[int] = set()
        for j, ps in enumerate(self.parity_sets):
            if len(set(ps)) != self.k or len(ps) != self.k:
                raise InvalidArgument(f"parity set {j} does not have exactly k={self.k} elements")
            if seen & set(ps):
                raise InvalidArgument(f"parity set {j} overlaps an earlier one")
            seen |= set(ps)
        if not seen <= self.matroid.ground_set:
            raise InvalidArgument("parity sets must lie inside the matroid's ground set")
        if any(w < 0 for w in self.set_weights):
            raise InvalidArgument("parity set weights must be nonnegative")

    def __len__(self) -> int:
        return len(self.parity_sets)

    def union(self, chosen: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for j in chosen:
            out.update(self.parity_sets[j])
        return frozenset(out)

    def is_feasible(self, chosen: Iterable[int]) -> bool:
        chosen = list(chosen)
        for j in chosen:
            if not 0 <= j < len(self.parity_sets):
                raise InvalidArgument(f"no parity set with index {j}")
        return self.matroid._independent(self.union(chosen))

    def weight_of(self, chosen: Iterable[int]) -> int:
        return sum(self.set_weights[j] for j in chosen)


class CopyRole(NamedTuple):
    role: str  # "matroid" | "hyperedge" | "dummy"
    source: int  # source element id
    hyperedge: int  # hyperedge index for role "hyperedge", else -1


@dataclass(frozen=True)
class ReductionCertificate:
    source: DbmisInstance
    target: ParityInstance
    element_map: dict = field(compare=False)  # source element -> parity set index
    copy_roles: dict = field(compare=False)  # target element -> CopyRole

    def parity_set_of(self, v: int) -> tuple[int, ...]:
        return self.target.parity_sets[self.element_map[v]]

    @property
    def source_of(self) -> tuple[int, ...]:
        """Source element for each parity set index."""
        return tuple(self.source.ground)


def reduce_dbmis_to_parity(inst: DbmisInstance) -> ReductionCertificate:
    """Reduce a Max-WDBMIS instance to weighted matroid (Delta+1)-parity.

    Ids: per source element in ascending order, its matroid copy followed by
    its hyperedge copies (ascending hyperedge index); dummies come after all
    labeled copies, grouped by source element.
    """
    delta = inst.degree
    inc = inst.hyper.incidence
    next_id = 0
    matroid_copy: dict[int, int] = {}
    edge_copies: dict[int, list[int]] = {j: [] for j in range(len(inst.hyperedges))}
    roles: dict[int, CopyRole] = {}
    members: dict[int, list[int]] = {}
    for v in inst.ground:
        matroid_copy[v] = next_id
        roles[next_id] = CopyRole("matroid", v, -1)
        members[v] = [next_id]
        next_id += 1
        for j in inc[v]:
            edge_copies[j].append(next_id)
            roles[next_id] = CopyRole("hyperedge", v, j)
            members[v].append(next_id)
            next_id += 1
    dummies: dict[int, list[int]] = {}
    for v in inst.ground:
        for _ in range(delta - len(inc[v])):
            roles[next_id] = CopyRole("dummy", v, -1)
            members[v].append(next_id)
            dummies.setdefault(v, []).append(next_id)
            next_id += 1

    children: list[Matroid] = [make_copy(inst.matroid, matroid_copy)]
    for j, b in enumerate(inst.bounds):
        children.append(make_uniform(b, edge_copies[j]))
    for v, ds in dummies.items():
        children.append(make_free(ds))
    target_matroid = make_direct_sum(children)

    parity_sets = tuple(tuple(members[v]) for v in inst.ground)
    weights = tuple(inst.weight(v) for v in inst.ground)
    target = ParityInstance(target_matroid, parity_sets, delta + 1, weights)
    element_map = {v: j for j, v in enumerate(inst.ground)}
    return ReductionCertificate(inst, target, element_map, roles)


def lift_solution(cert: ReductionCertificate, chosen: Iterable[int]) -> frozenset[int]:
    """Map a feasible parity subcollection back to a feasible source set."""
    chosen = frozenset(chosen)
    if not cert.target.is_feasible(chosen):
        raise ContractViolation("chosen parity sets are not independent in the target matroid")
    src = cert.source_of
    return frozenset(src[j] for j in chosen)


def push_solution(cert: ReductionCertificate, feasible_src: Iterable[int]) -> frozenset[int]:
    """Map a feasible source set to its parity subcollection."""
    feasible_src = frozenset(feasible_src)
    if not cert.source.is_feasible(feasible_src):
        raise ContractViolation("source set is not feasible")
    return frozenset(cert.element_map[v] for v in feasible_src)


def solve_parity_exact(p: ParityInstance, cap: int = DEFAULT_PARITY_CAP) -> frozenset[int]:
    """Maximum-weight feasible subcollection by pruned enumeration.

    Ties go to the lexicographically smallest sorted index tuple.
    """
    sets = [frozenset(ps) for ps in p.parity_sets]
    indep = p.matroid._independent

    def feasible(chosen: list[int]) -> bool:
        return indep(frozenset().union(*(sets[j] for j in chosen)))

    idx = range(len(sets))
    return frozenset(best_subset(idx, p.set_weights, feasible, cap, what="parity sets"))


def _greedy_order(p: ParityInstance) -> list[int]:
    return sorted(range(len(p.parity_sets)), key=lambda j: (-p.set_weights[j], j))


def solve_parity_greedy(p: ParityInstance) -> frozenset[int]:
    """Scan sets by descending weight (ties by index) and keep each that fits."""
    chosen: list[int] = []
    union: frozenset[int] = frozenset()
    for j in _greedy_order(p):
        u = union | frozenset(p.parity_sets[j])
        if p.matroid._independent(u):
            chosen.append(j)
            union = u
    return frozenset(chosen)


def solve_parity_local(
    p: ParityInstance,
    t: int,
    max_remove: int | None = None,
    start: Iterable[int] | None = None,
) -> frozenset[int]:
    """Bounded-exchange local search seeded by :func:`solve_parity_greedy`.

    A move adds ``A`` (``|A| <= t`` unchosen sets) and removes ``R``
    (``|R| <= max_remove`` chosen sets, default ``t``); it is taken when the
    result is feasible and strictly heavier.  Additions are scanned by
    descending weight, removals smallest-first, and the first improving move
    wins.  Weights are integers, so the search stops after at most
    ``w(all sets)`` moves.
    """
    if t < 1:
        raise InvalidArgument("exchange size t must be at least 1")
    max_remove = t if max_remove is None else max_remove
    sets = [frozenset(ps) for ps in p.parity_sets]
    w = p.set_weights
    indep = p.matroid._independent
    current = set(solve_parity_greedy(p) if start is None else start)
    if not p.is_feasible(current):
        raise ContractViolation("local search start is infeasible")
    order = _greedy_order(p)

    def union_of(js: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for j in js:
            out |= sets[j]
        return frozenset(out)

    while True:
        move = _find_improving_exchange(current, order, t, max_remove, sets, w, indep, union_of)
        if move is None:
            return frozenset(current)
        add, remove = move
        current.difference_update(remove)
        current.update(add)


def _find_improving_exchange(current, order, t, max_remove, sets, w, indep, union_of):
    unchosen = [j for j in order if j not in current]
    chosen_sorted = sorted(current, key=lambda j: (w[j], j))
    for size in range(1, t + 1):
        for add in itertools.combinations(unchosen, size):
            add_union = union_of(add)
            if not indep(add_union):
                continue
            gain = sum(w[j] for j in add)
            for r in range(0, min(max_remove, len(chosen_sorted)) + 1):
                for remove in itertools.combinations(chosen_sorted, r):
                    if sum(w[j] for j in remove) >= gain:
                        continue
                    kept = current.difference(remove)
                    if indep(union_of(kept) | add_union):
                        return add, remove
    return None
