"""Edge-colored multigraphs and properly colored forests (with bundles).

Colors are ``0 .. k-1``.  Per-vertex-per-color bounds ``g_i(v)`` default to 1,
which is ordinary proper coloring.  Within a color class parallel edges are
rejected at construction.

A *bundle* is a nonempty set of parallel edges; ``F`` is a forest with
bundles when its support graph (one edge per nonempty bundle) is acyclic.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

from ._search import best_subset
from .errors import ContractViolation, InvalidArgument
from .instance import DbmisInstance, make_instance
from .matroids import make_graphic

__all__ = [
    "Edge",
    "EdgeColoredMultigraph",
    "make_ecgraph",
    "BundledForest",
    "is_g_properly_colored",
    "is_forest",
    "is_forest_with_bundles",
    "is_pc_forest_with_bundles",
    "reduce_gpf_to_dbmis",
    "algorithm1",
    "candidate_set",
    "is_greedy_closed",
    "is_exchange_closed",
    "max_forest_with_bundles",
    "maximum_matching",
    "small_colors",
    "solve_gpf_exact",
    "solve_bundled_exact",
]

Pair = tuple[int, int]


class Edge(NamedTuple):
    u: int
    v: int
    color: int
    weight: int = 1

    @property
    def pair(self) -> Pair:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


@dataclass(frozen=True)
class EdgeColoredMultigraph:
    n: int
    edges: tuple[Edge, ...]
    k: int
    bounds: tuple[tuple[tuple[int, int], int], ...] = ()  # ((v, color), g) where g != 1
    _g: dict = field(compare=False, repr=False, default=None)  # type: ignore[assignment]
    _by_pair: dict = field(compare=False, repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 1:
            raise InvalidArgument("need n >= 0 and k >= 1")
        seen: set[tuple[Pair, int]] = set()
        by_pair: dict[Pair, list[int]] = defaultdict(list)
        for j, e in enumerate(self.edges):
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise InvalidArgument(f"edge {j} has an endpoint outside 0..{self.n - 1}")
            if e.u == e.v:
                raise InvalidArgument(f"edge {j} is a loop at vertex {e.u}")
            if not 0 <= e.color < self.k:
                raise InvalidArgument(f"edge {j} has color {e.color} outside 0..{self.k - 1}")
            if e.weight < 0:
                raise InvalidArgument(f"edge {j} has negative weight")
            key = (e.pair, e.color)
            if key in seen:
                raise InvalidArgument(
                    f"edge {j} is parallel to an earlier edge of the same color {e.color} "
                    f"between {e.pair[0]} and {e.pair[1]}"
                )
            seen.add(key)
            by_pair[e.pair].append(j)
        g = {}
        for (v, i), b in self.bounds:
            if not (0 <= v < self.n and 0 <= i < self.k) or b < 0:
                raise InvalidArgument(f"bad bound g_{i}({v}) = {b}")
            g[(v, i)] = b
        object.__setattr__(self, "_g", g)
        object.__setattr__(self, "_by_pair", {p: tuple(js) for p, js in by_pair.items()})

    @property
    def m(self) -> int:
        return len(self.edges)

    def bound(self, v: int, color: int) -> int:
        return self._g.get((v, color), 1)

    @property
    def unit_bounds(self) -> bool:
        return all(b == 1 for b in self._g.values())

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return self._by_pair.get((u, v) if u < v else (v, u), ())

    @property
    def pairs(self) -> list[Pair]:
        return sorted(self._by_pair)

    def color_class(self, color: int) -> list[int]:
        return [j for j, e in enumerate(self.edges) if e.color == color]

    def weight_of(self, F: Iterable[int]) -> int:
        return sum(self.edges[j].weight for j in F)


def make_ecgraph(
    n: int,
    edges: Sequence[Sequence[int]],
    k: int | None = None,
    bounds: dict[tuple[int, int], int] | None = None,
) -> EdgeColoredMultigraph:
    """Build a graph from ``(u, v, color)`` or ``(u, v, color, weight)`` tuples."""
    es = tuple(Edge(*map(int, e)) for e in edges)
    if k is None:
        k = max((e.color for e in es), default=0) + 1
    bs = tuple(sorted((key, int(b)) for key, b in (bounds or {}).items() if b != 1))
    return EdgeColoredMultigraph(n, es, k, bs)


def _color_counts_ok(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for j in F:
        e = g.edges[j]
        for x in (e.u, e.v):
            counts[(x, e.color)] += 1
            if counts[(x, e.color)] > g.bound(x, e.color):
                return False
    return True


def is_g_properly_colored(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    """At most ``g_i(v)`` chosen edges of color ``i`` touch each vertex ``v``."""
    return _color_counts_ok(g, F)


def _acyclic(pairs: Iterable[Pair]) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_forest(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    return _acyclic(g.edges[j].pair for j in F)


def is_forest_with_bundles(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    return _acyclic({g.edges[j].pair for j in F})


def is_pc_forest_with_bundles(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    F = list(F)
    return _color_counts_ok(g, F) and is_forest_with_bundles(g, F)


def reduce_gpf_to_dbmis(g: EdgeColoredMultigraph) -> DbmisInstance:
    """Graphic matroid on the edges plus one hyperedge per nonempty ``delta_{E_i}(v)``.

    Element ids are edge ids.  Hyperedges are ordered by vertex, then color.
    """
    matroid = make_graphic(g.n, [(e.u, e.v) for e in g.edges])
    star: dict[tuple[int, int], list[int]] = defaultdict(list)
    for j, e in enumerate(g.edges):
        star[(e.u, e.color)].append(j)
        star[(e.v, e.color)].append(j)
    keys = sorted(star)
    hyperedges = [star[key] for key in keys]
    bounds = [g.bound(*key) for key in keys]
    weights = {j: e.weight for j, e in enumerate(g.edges)}
    return make_instance(matroid, hyperedges, bounds, weights)


class BundledForest:
    """An edge set ``F`` kept together with its support forest and bundles."""

    def __init__(self, graph: EdgeColoredMultigraph, edges: Iterable[int] = ()):
        self.graph = graph
        self.bundles: dict[Pair, set[int]] = {}
        self.adj: dict[int, set[int]] = defaultdict(set)
        self._count: dict[tuple[int, int], int] = defaultdict(int)
        for j in edges:
            if not self.can_add(j):
                raise InvalidArgument(f"edge {j} breaks the properly colored forest with bundles")
            self.add(j)

    # -- queries ---------------------------------------------------------
    @property
    def edges(self) -> frozenset[int]:
        return frozenset(j for b in self.bundles.values() for j in b)

    def __len__(self) -> int:
        return sum(len(b) for b in self.bundles.values())

    def __contains__(self, j: int) -> bool:
        return j in self.bundles.get(self.graph.edges[j].pair, ())

    @property
    def support(self) -> list[Pair]:
        return sorted(self.bundles)

    def bundle(self, u: int, v: int) -> frozenset[int]:
        return frozenset(self.bundles.get((u, v) if u < v else (v, u), ()))

    def support_path(self, u: int, v: int) -> list[int] | None:
        """Vertices ``u = z0, ..., zq = v`` of the unique support path, or None."""
        if u == v:
            return [u]
        prev = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in sorted(self.adj[x]):
                if y not in prev:
                    prev[y] = x
                    if y == v:
                        path = [v]
                        while path[-1] != u:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    queue.append(y)
        return None

    def can_add(self, j: int) -> bool:
        g = self.graph
        e = g.edges[j]
        if j in self:
            return False
        for x in (e.u, e.v):
            if self._count[(x, e.color)] + 1 > g.bound(x, e.color):
                return False
        return e.pair in self.bundles or self.support_path(e.u, e.v) is None

    # -- updates ---------------------------------------------------------
    def add(self, j: int) -> None:
        e = self.graph.edges[j]
        p = e.pair
        if p not in self.bundles:
            self.bundles[p] = set()
            self.adj[e.u].add(e.v)
            self.adj[e.v].add(e.u)
        self.bundles[p].add(j)
        self._count[(e.u, e.color)] += 1
        self._count[(e.v, e.color)] += 1

    def remove(self, j: int) -> None:
        e = self.graph.edges[j]
        p = e.pair
        self.bundles[p].remove(j)
        self._count[(e.u, e.color)] -= 1
        self._count[(e.v, e.color)] -= 1
        if not self.bundles[p]:
            del self.bundles[p]
            self.adj[e.u].discard(e.v)
            self.adj[e.v].discard(e.u)

    def check(self) -> None:
        """Raise AssertionError unless the maintained structure matches ``edges``."""
        F = self.edges
        assert is_pc_forest_with_bundles(self.graph, F)
        for p, b in self.bundles.items():
            assert b and all(self.graph.edges[j].pair == p for j in b)
        assert sum(len(ys) for ys in self.adj.values()) == 2 * len(self.bundles)

    def __repr__(self) -> str:
        return f"BundledForest(edges={sorted(self.edges)})"


def candidate_set(
    g: EdgeColoredMultigraph, F: BundledForest, u: int, v: int, S: Iterable[int]
) -> frozenset[int]:
    """Unused ``u``-``v`` edges whose colors avoid every color at ``u`` or ``v`` in ``F - S``.

    ``S`` must be the full bundle of ``F`` on some edge of the ``u``-``v``
    support path.
    """
    S = frozenset(S)
    path = F.support_path(u, v)
    if path is None or len(path) < 2:
        raise ContractViolation(f"no support path between {u} and {v}")
    on_path = {F.bundle(a, b) for a, b in zip(path, path[1:])}
    if S not in on_path:
        raise ContractViolation("S is not a bundle on the u-v support path")
    rest = F.edges - S
    blocked = {g.edges[j].color for j in rest if u in g.edges[j][:2] or v in g.edges[j][:2]}
    return frozenset(
        j for j in g.edges_between(u, v) if j not in F and g.edges[j].color not in blocked
    )


def _greedy_pass(g: EdgeColoredMultigraph, F: BundledForest) -> None:
    for j in range(g.m):
        if j not in F and F.can_add(j):
            F.add(j)


def _find_exchange(g: EdgeColoredMultigraph, F: BundledForest):
    for u, v in g.pairs:
        if all(j in F for j in g.edges_between(u, v)):
            continue
        path = F.support_path(u, v)
        if path is None:
            continue
        for a, b in zip(path, path[1:]):
            S = F.bundle(a, b)
            cand = candidate_set(g, F, u, v, S)
            if len(cand) > len(S):
                return S, cand
    return None


def algorithm1(g: EdgeColoredMultigraph, trace: list[int] | None = None) -> BundledForest:
    """Local search for a maximum properly colored forest with bundles (1/3-approximation).

    Starts from the empty set, adds every edge that keeps ``F`` feasible
    (ascending id), then looks for a pair ``(u, v)`` with unused edges and a
    bundle ``S`` on their support path whose candidate set is larger than
    ``S``.  Swapping them strictly grows ``F``, after which the greedy pass
    restarts.  Pairs are scanned in ascending order and path bundles from
    ``u`` toward ``v``.  If ``trace`` is given, ``|F|`` is appended after each
    greedy pass.
    """
    if not g.unit_bounds:
        raise InvalidArgument("algorithm1 needs g_i(v) = 1 everywhere")
    F = BundledForest(g)
    while True:
        _greedy_pass(g, F)
        if trace is not None:
            trace.append(len(F))
        move = _find_exchange(g, F)
        if move is None:
            return F
        S, cand = move
        for j in S:
            F.remove(j)
        for j in sorted(cand):
            F.add(j)


def is_greedy_closed(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    F = frozenset(F)
    return not any(is_pc_forest_with_bundles(g, F | {j}) for j in range(g.m) if j not in F)


def is_exchange_closed(g: EdgeColoredMultigraph, F: Iterable[int]) -> bool:
    return _find_exchange(g, BundledForest(g, sorted(F))) is None


def max_forest_with_bundles(g: EdgeColoredMultigraph, M: Iterable[int]) -> BundledForest:
    """Largest ``F`` within ``M`` whose support is a forest.

    Kruskal on ``supp(M)`` with each support edge weighted by its bundle size
    (ties by pair), keeping whole bundles.  ``M`` must itself be
    g-properly colored, since every bundle is kept in full.
    """
    bundles: dict[Pair, list[int]] = defaultdict(list)
    for j in sorted(set(M)):
        bundles[g.edges[j].pair].append(j)
    if not is_g_properly_colored(g, [j for b in bundles.values() for j in b]):
        raise ContractViolation("M must be g-properly colored")
    order = sorted(bundles, key=lambda p: (-len(bundles[p]), p))
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = BundledForest(g)
    for p in order:
        ru, rv = find(p[0]), find(p[1])
        if ru != rv:
            parent[ru] = rv
            for j in bundles[p]:
                out.add(j)
    return out


def maximum_matching(g: EdgeColoredMultigraph, color: int) -> frozenset[int]:
    """Maximum-cardinality matching inside one (simple) color class."""
    H = nx.Graph()
    edge_id = {}
    for j in g.color_class(color):
        e = g.edges[j]
        H.add_edge(e.u, e.v)
        edge_id[e.pair] = j
    matching = nx.max_weight_matching(H, maxcardinality=True)
    return frozenset(edge_id[(a, b) if a < b else (b, a)] for a, b in matching)


def small_colors(g: EdgeColoredMultigraph) -> BundledForest:
    """Union of per-color maximum matchings, cut down to a maximum forest with bundles.

    A 3/4-approximation for k = 2 and 1/2 for k = 3 (runs for any k).
    """
    M: set[int] = set()
    for i in range(g.k):
        M |= maximum_matching(g, i)
    return max_forest_with_bundles(g, M)


def solve_gpf_exact(g: EdgeColoredMultigraph, cap: int = 20) -> frozenset[int]:
    """Maximum-weight g-properly colored forest by enumeration."""
    w = [e.weight for e in g.edges]

    def ok(F: list[int]) -> bool:
        return _color_counts_ok(g, F) and is_forest(g, F)

    return frozenset(best_subset(range(g.m), w, ok, cap, what="edges"))


def solve_bundled_exact(g: EdgeColoredMultigraph, cap: int = 20) -> frozenset[int]:
    """Maximum-size g-properly colored forest with bundles by enumeration."""
    return frozenset(best_subset(range(g.m), [1] * g.m, lambda F: is_pc_forest_with_bundles(g, F), cap, what="edges"))
