"""g-properly colored b-matchings and their hierarchical b-matching form.

Every vertex ``v`` is split into one copy ``v^e`` per incident edge ``e``;
edge ``e = uv`` becomes ``u^e v^e``.  The per-color copies ``L_{v,i}`` carry
bound ``g_i(v)`` and the set of all copies of ``v`` carries ``b(v)``, which
gives a laminar family (disjoint color sets nested in one top set per vertex).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._search import best_subset
from .errors import InvalidArgument
from .pcforest import EdgeColoredMultigraph

__all__ = [
    "BMatchingInstance",
    "HierarchicalBMatchingInstance",
    "LaminarSet",
    "reduce_bmatching_to_hierarchical",
    "is_laminar",
    "laminar_feasible",
    "is_g_b_matching",
    "solve_bmatching_exact",
    "solve_hierarchical_exact",
]


@dataclass(frozen=True)
class BMatchingInstance:
    """A colored multigraph plus per-vertex degree bounds ``b``."""

    graph: EdgeColoredMultigraph
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_b(self.graph, self.b)


@dataclass(frozen=True)
class LaminarSet:
    members: frozenset[int]
    bound: int
    vertex: int  # original vertex
    color: int  # -1 for the per-vertex top set


@dataclass(frozen=True)
class HierarchicalBMatchingInstance:
    n_vertices: int  # |V'|
    edges: tuple[tuple[int, int], ...]  # E', edge j corresponds to original edge j
    weights: tuple[int, ...]
    family: tuple[LaminarSet, ...]
    copy_of: tuple[tuple[int, int], ...]  # V' id -> (original vertex, original edge)

    def weight_of(self, F: Iterable[int]) -> int:
        return sum(self.weights[j] for j in F)


def _check_b(g: EdgeColoredMultigraph, b: Sequence[int]) -> list[int]:
    b = [int(x) for x in b]
    if len(b) != g.n or any(x < 0 for x in b):
        raise InvalidArgument("b must give one nonnegative bound per vertex")
    return b


def reduce_bmatching_to_hierarchical(
    g: EdgeColoredMultigraph, b: Sequence[int]
) -> HierarchicalBMatchingInstance:
    """Split-graph instance; copies are numbered by vertex, then incident edge id."""
    b = _check_b(g, b)
    incident: dict[int, list[int]] = defaultdict(list)
    for j, e in enumerate(g.edges):
        incident[e.u].append(j)
        incident[e.v].append(j)
    copy_id: dict[tuple[int, int], int] = {}
    copy_of: list[tuple[int, int]] = []
    for v in range(g.n):
        for j in incident[v]:
            copy_id[(v, j)] = len(copy_of)
            copy_of.append((v, j))
    edges = tuple((copy_id[(e.u, j)], copy_id[(e.v, j)]) for j, e in enumerate(g.edges))
    family: list[LaminarSet] = []
    for v in range(g.n):
        if not incident[v]:
            continue
        family.append(LaminarSet(frozenset(copy_id[(v, j)] for j in incident[v]), b[v], v, -1))
        by_color: dict[int, list[int]] = defaultdict(list)
        for j in incident[v]:
            by_color[g.edges[j].color].append(copy_id[(v, j)])
        for i in sorted(by_color):
            family.append(LaminarSet(frozenset(by_color[i]), g.bound(v, i), v, i))
    return HierarchicalBMatchingInstance(
        len(copy_of),
        edges,
        tuple(e.weight for e in g.edges),
        tuple(family),
        tuple(copy_of),
    )


def is_laminar(family: Iterable[Iterable[int]]) -> bool:
    sets = [frozenset(s) for s in family]
    for a_idx, a in enumerate(sets):
        for c in sets[a_idx + 1 :]:
            if a & c and not (a <= c or c <= a):
                return False
    return True


def laminar_feasible(h: HierarchicalBMatchingInstance, F: Iterable[int]) -> bool:
    """Every laminar set sees at most its bound of chosen edge endpoints."""
    deg: dict[int, int] = defaultdict(int)
    for j in F:
        x, y = h.edges[j]
        deg[x] += 1
        deg[y] += 1
    return all(sum(deg[x] for x in L.members) <= L.bound for L in h.family)


def is_g_b_matching(g: EdgeColoredMultigraph, b: Sequence[int], F: Iterable[int]) -> bool:
    """``|delta_F(v)| <= b(v)`` and ``|delta_{F_i}(v)| <= g_i(v)`` everywhere."""
    deg: dict[int, int] = defaultdict(int)
    cdeg: dict[tuple[int, int], int] = defaultdict(int)
    for j in F:
        e = g.edges[j]
        for x in (e.u, e.v):
            deg[x] += 1
            cdeg[(x, e.color)] += 1
    return all(d <= b[x] for x, d in deg.items()) and all(
        d <= g.bound(x, i) for (x, i), d in cdeg.items()
    )


def solve_bmatching_exact(g: EdgeColoredMultigraph, b: Sequence[int], cap: int = 20) -> frozenset[int]:
    """Maximum-weight g-properly colored b-matching by pruned enumeration."""
    b = _check_b(g, b)
    w = [e.weight for e in g.edges]
    return frozenset(best_subset(range(g.m), w, lambda F: is_g_b_matching(g, b, F), cap, what="edges"))


def solve_hierarchical_exact(h: HierarchicalBMatchingInstance, cap: int = 20) -> frozenset[int]:
    return frozenset(
        best_subset(range(len(h.edges)), h.weights, lambda F: laminar_feasible(h, F), cap, what="edges")
    )
