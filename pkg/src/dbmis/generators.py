"""Seeded random instance generators (all randomness goes through SplitMix64)."""
from __future__ import annotations

from .bmatching import BMatchingInstance
from .branching import ColoredDigraph, make_digraph
from .errors import InvalidArgument
from .instance import DbmisInstance, make_instance
from .matroids import Matroid, make_free, make_graphic, make_partition, make_uniform
from .pcforest import EdgeColoredMultigraph, make_ecgraph
from .rng import SplitMix64

__all__ = ["gen_ecgraph", "gen_digraph", "gen_dbmis", "gen_bmatching", "BOUND_MODES", "MATROID_KINDS"]

BOUND_MODES = ("unit", "random")
MATROID_KINDS = ("graphic", "uniform", "partition", "free")


def _bounds(rng: SplitMix64, keys, mode: str) -> dict:
    if mode not in BOUND_MODES:
        raise InvalidArgument(f"bound mode must be one of {BOUND_MODES}")
    if mode == "unit":
        return {}
    return {key: rng.below(3) for key in sorted(keys)}


def gen_ecgraph(
    seed: int,
    n: int,
    m: int,
    k: int,
    parallel_prob: float = 0.0,
    bound_mode: str = "unit",
    max_weight: int = 1,
) -> EdgeColoredMultigraph:
    """Random edge-colored multigraph with no parallel edges inside a color class.

    Each edge is drawn uniformly from the still-free (pair, color) slots; with
    probability ``parallel_prob`` the draw is restricted to slots whose pair
    already carries an edge, which produces bundles.
    """
    if n < 2 or m < 0 or k < 1:
        raise InvalidArgument("need n >= 2, m >= 0, k >= 1")
    if not 0.0 <= parallel_prob <= 1.0:
        raise InvalidArgument("parallel_prob must lie in [0, 1]")
    if max_weight < 1:
        raise InvalidArgument("max_weight must be at least 1")
    capacity = k * n * (n - 1) // 2
    if m > capacity:
        raise InvalidArgument(f"{m} edges exceed the {capacity} simple-per-color slots")
    rng = SplitMix64(seed)
    free = [((u, v), c) for u in range(n) for v in range(u + 1, n) for c in range(k)]
    used_pairs: set[tuple[int, int]] = set()
    edges = []
    for _ in range(m):
        pool = free
        if used_pairs and rng.chance(parallel_prob):
            near = [s for s in free if s[0] in used_pairs]
            if near:
                pool = near
        slot = rng.choice(pool)
        free.remove(slot)
        (u, v), c = slot
        used_pairs.add((u, v))
        edges.append((u, v, c, rng.between(1, max_weight)))
    keys = {(x, c) for u, v, c, _ in edges for x in (u, v)}
    return make_ecgraph(n, edges, k, _bounds(rng, keys, bound_mode))


def gen_digraph(
    seed: int,
    n: int,
    m: int,
    k: int,
    bound_mode: str = "unit",
    max_weight: int = 1,
) -> ColoredDigraph:
    """Random loopless colored digraph; parallel and antiparallel arcs may occur."""
    if n < 2 or m < 0 or k < 1:
        raise InvalidArgument("need n >= 2, m >= 0, k >= 1")
    rng = SplitMix64(seed)
    arcs = []
    for _ in range(m):
        t = rng.below(n)
        h = rng.below(n - 1)
        h += h >= t
        arcs.append((t, h, rng.below(k), rng.between(1, max_weight)))
    keys = {(x, c) for t, h, c, _ in arcs for x in (t, h)}
    return make_digraph(n, arcs, k, _bounds(rng, keys, bound_mode))


def gen_bmatching(
    seed: int,
    n: int,
    m: int,
    k: int,
    parallel_prob: float = 0.0,
    bound_mode: str = "unit",
    max_weight: int = 1,
    max_b: int = 3,
) -> BMatchingInstance:
    graph = gen_ecgraph(seed, n, m, k, parallel_prob, bound_mode, max_weight)
    rng = SplitMix64(seed ^ 0xB0B)
    return BMatchingInstance(graph, tuple(rng.below(max_b + 1) for _ in range(n)))


def _random_matroid(rng: SplitMix64, n: int, kind: str) -> Matroid:
    ids = list(range(n))
    if kind == "graphic":
        nv = max(2, n // 2 + 1)
        edges = []
        for _ in range(n):
            u = rng.below(nv)
            v = rng.below(nv - 1)
            v += v >= u
            edges.append((u, v))
        return make_graphic(nv, edges)
    if kind == "uniform":
        return make_uniform(rng.between(1, max(1, n)), ids)
    if kind == "partition":
        nparts = rng.between(1, max(1, n))
        owner = [rng.below(nparts) for _ in ids]
        parts = [[x for x in ids if owner[x] == j] for j in range(nparts)]
        parts = [p for p in parts if p]
        return make_partition(parts, [rng.between(1, len(p)) for p in parts], ids)
    if kind == "free":
        return make_free(ids)
    raise InvalidArgument(f"matroid kind must be one of {MATROID_KINDS}")


def gen_dbmis(
    seed: int,
    n: int,
    max_degree: int,
    unit_bounds: bool = True,
    max_weight: int = 1,
    matroid_kind: str | None = None,
    n_hyperedges: int | None = None,
) -> DbmisInstance:
    """Random instance on ``n`` elements whose hypergraph degree is at most ``max_degree``.

    ``matroid_kind=None`` picks one of :data:`MATROID_KINDS` at random.
    Unit-bound instances use bounds in {0, 1} (0 rarely); otherwise 0..2.
    """
    if n < 0 or max_degree < 0:
        raise InvalidArgument("need n >= 0 and max_degree >= 0")
    rng = SplitMix64(seed)
    kind = MATROID_KINDS[rng.below(len(MATROID_KINDS))] if matroid_kind is None else matroid_kind
    matroid = _random_matroid(rng, n, kind)
    load = [0] * n
    hyperedges: list[list[int]] = []
    bounds: list[int] = []
    h = rng.between(0, n + 1) if n_hyperedges is None else n_hyperedges
    for _ in range(h):
        open_ = [x for x in range(n) if load[x] < max_degree]
        if not open_:
            break
        size = min(len(open_), rng.between(1, 3))
        e = sorted(rng.sample(open_, size))
        for x in e:
            load[x] += 1
        hyperedges.append(e)
        if unit_bounds:
            bounds.append(0 if rng.below(8) == 0 else 1)
        else:
            bounds.append(rng.below(3))
    weights = {x: rng.between(1, max_weight) for x in range(n)}
    return make_instance(matroid, hyperedges, bounds, weights)
