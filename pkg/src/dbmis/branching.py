"""Colored digraphs and g-properly (out-)colored branchings.

A branching need not be spanning: every vertex has in-degree at most one and
the underlying undirected graph of the chosen arcs is acyclic.  In
``"colored"`` mode each vertex sees at most ``g_i(v)`` chosen arcs of color
``i`` among all incident arcs; in ``"out-colored"`` mode only arcs leaving
``v`` count.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from ._search import best_subset
from .errors import InvalidArgument
from .instance import DbmisInstance, make_instance
from .matroids import Matroid, make_direct_sum, make_graphic, make_partition

__all__ = [
    "Arc",
    "ColoredDigraph",
    "make_digraph",
    "MODES",
    "is_branching",
    "is_g_branching",
    "out_colored_branching_matroids",
    "reduce_colored_branching_to_dbmis",
    "solve_branching_exact",
]

MODES = ("colored", "out-colored")


class Arc(NamedTuple):
    tail: int
    head: int
    color: int
    weight: int = 1


@dataclass(frozen=True)
class ColoredDigraph:
    n: int
    arcs: tuple[Arc, ...]
    k: int
    bounds: tuple[tuple[tuple[int, int], int], ...] = ()
    _g: dict = field(compare=False, repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 1:
            raise InvalidArgument("need n >= 0 and k >= 1")
        for j, a in enumerate(self.arcs):
            if not (0 <= a.tail < self.n and 0 <= a.head < self.n):
                raise InvalidArgument(f"arc {j} has an endpoint outside 0..{self.n - 1}")
            if a.tail == a.head:
                raise InvalidArgument(f"arc {j} is a loop at vertex {a.tail}")
            if not 0 <= a.color < self.k:
                raise InvalidArgument(f"arc {j} has color {a.color} outside 0..{self.k - 1}")
            if a.weight < 0:
                raise InvalidArgument(f"arc {j} has negative weight")
        g = {}
        for (v, i), b in self.bounds:
            if not (0 <= v < self.n and 0 <= i < self.k) or b < 0:
                raise InvalidArgument(f"bad bound g_{i}({v}) = {b}")
            g[(v, i)] = b
        object.__setattr__(self, "_g", g)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def bound(self, v: int, color: int) -> int:
        return self._g.get((v, color), 1)

    def weight_of(self, F: Iterable[int]) -> int:
        return sum(self.arcs[j].weight for j in F)


def make_digraph(
    n: int,
    arcs: Sequence[Sequence[int]],
    k: int | None = None,
    bounds: dict[tuple[int, int], int] | None = None,
) -> ColoredDigraph:
    arcs_t = tuple(Arc(*map(int, a)) for a in arcs)
    if k is None:
        k = max((a.color for a in arcs_t), default=0) + 1
    bs = tuple(sorted((key, int(b)) for key, b in (bounds or {}).items() if b != 1))
    return ColoredDigraph(n, arcs_t, k, bs)


def _has_undirected_cycle(d: ColoredDigraph, F: Sequence[int]) -> bool:
    # DFS over the underlying multigraph; a parallel or antiparallel pair is a cycle
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for j in F:
        a = d.arcs[j]
        adj[a.tail].append((a.head, j))
        adj[a.head].append((a.tail, j))
    seen: set[int] = set()
    for root in list(adj):
        if root in seen:
            continue
        stack = [(root, -1)]
        while stack:
            x, via = stack.pop()
            if x in seen:
                return True
            seen.add(x)
            for y, j in adj[x]:
                if j != via:
                    stack.append((y, j))
    return False


def is_branching(d: ColoredDigraph, F: Iterable[int]) -> bool:
    F = list(F)
    indeg: dict[int, int] = defaultdict(int)
    for j in F:
        indeg[d.arcs[j].head] += 1
        if indeg[d.arcs[j].head] > 1:
            return False
    return not _has_undirected_cycle(d, F)


def is_g_branching(d: ColoredDigraph, F: Iterable[int], mode: str = "colored") -> bool:
    """Direct check of the g-properly (out-)colored branching definition."""
    if mode not in MODES:
        raise InvalidArgument(f"mode must be one of {MODES}")
    F = list(F)
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for j in F:
        a = d.arcs[j]
        ends = (a.tail, a.head) if mode == "colored" else (a.tail,)
        for x in ends:
            counts[(x, a.color)] += 1
            if counts[(x, a.color)] > d.bound(x, a.color):
                return False
    return is_branching(d, F)


def out_colored_branching_matroids(d: ColoredDigraph) -> tuple[Matroid, Matroid, Matroid]:
    """``(M_G, M_in, M_g)`` whose common independent sets are the g-properly out-colored branchings.

    ``M_G`` is the graphic matroid of the underlying undirected graph,
    ``M_in`` caps every in-star at one arc, and ``M_g`` is the direct sum
    over tails of partition matroids splitting the out-star by color.
    """
    ground = range(d.m)
    m_graph = make_graphic(d.n, [(a.tail, a.head) for a in d.arcs])
    in_star: dict[int, list[int]] = defaultdict(list)
    out_star: dict[int, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    for j, a in enumerate(d.arcs):
        in_star[a.head].append(j)
        out_star[a.tail][a.color].append(j)
    heads = sorted(in_star)
    m_in = make_partition([in_star[v] for v in heads], [1] * len(heads), ground)
    per_tail = []
    for v in sorted(out_star):
        colors = sorted(out_star[v])
        per_tail.append(
            make_partition([out_star[v][i] for i in colors], [d.bound(v, i) for i in colors])
        )
    m_g = make_direct_sum(per_tail)
    return m_graph, m_in, m_g


def reduce_colored_branching_to_dbmis(d: ColoredDigraph) -> DbmisInstance:
    """Branchings under incident color bounds as a Max-WDBMIS instance with ``Delta <= 3``.

    Hyperedges: each nonempty in-star (bound 1), then each nonempty
    ``(vertex, color)`` incidence set (bound ``g_i(v)``), both in ascending
    vertex/color order.  Element ids are arc ids.
    """
    matroid = make_graphic(d.n, [(a.tail, a.head) for a in d.arcs])
    in_star: dict[int, list[int]] = defaultdict(list)
    color_star: dict[tuple[int, int], list[int]] = defaultdict(list)
    for j, a in enumerate(d.arcs):
        in_star[a.head].append(j)
        color_star[(a.tail, a.color)].append(j)
        color_star[(a.head, a.color)].append(j)
    hyperedges: list[list[int]] = []
    bounds: list[int] = []
    for v in sorted(in_star):
        hyperedges.append(in_star[v])
        bounds.append(1)
    for key in sorted(color_star):
        hyperedges.append(color_star[key])
        bounds.append(d.bound(*key))
    weights = {j: a.weight for j, a in enumerate(d.arcs)}
    return make_instance(matroid, hyperedges, bounds, weights)


def solve_branching_exact(d: ColoredDigraph, mode: str = "colored", cap: int = 20) -> frozenset[int]:
    """Maximum-weight g-properly (out-)colored branching by pruned enumeration."""
    if mode not in MODES:
        raise InvalidArgument(f"mode must be one of {MODES}")
    w = [a.weight for a in d.arcs]
    return frozenset(
        best_subset(range(d.m), w, lambda F: is_g_branching(d, F, mode), cap, what="arcs")
    )
