"""Max-(W)DBMIS instances: a matroid, a hypergraph with upper bounds, and weights."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgument
from .matroids import Matroid

__all__ = [
    "BoundedHypergraph",
    "DbmisInstance",
    "make_instance",
    "is_feasible",
    "degree",
    "has_unit_bounds",
    "weight_of",
]


@dataclass(frozen=True)
class BoundedHypergraph:
    """Hyperedges over ``ground`` with an upper bound ``g(e)`` each.

    Duplicate hyperedges are kept and count separately toward the degree.
    """

    ground: tuple[int, ...]
    hyperedges: tuple[frozenset[int], ...]
    bounds: tuple[int, ...]
    incidence: dict = field(compare=False, repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if len(self.hyperedges) != len(self.bounds):
            raise InvalidArgument("one bound per hyperedge required")
        ground = set(self.ground)
        inc: dict[int, list[int]] = {x: [] for x in self.ground}
        for j, (e, b) in enumerate(zip(self.hyperedges, self.bounds)):
            if b < 0:
                raise InvalidArgument(f"hyperedge {j} has negative bound {b}")
            if not e <= ground:
                raise InvalidArgument(f"hyperedge {j} contains ids outside the ground set")
            for x in e:
                inc[x].append(j)
        object.__setattr__(self, "incidence", {x: tuple(js) for x, js in inc.items()})

    @property
    def max_degree(self) -> int:
        return max((len(js) for js in self.incidence.values()), default=0)

    def degree_of(self, x: int) -> int:
        return len(self.incidence[x])


@dataclass(frozen=True)
class DbmisInstance:
    matroid: Matroid
    hyper: BoundedHypergraph
    weights: tuple[tuple[int, int], ...]  # sorted (element, weight) pairs
    _w: dict = field(compare=False, repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if tuple(self.hyper.ground) != tuple(self.matroid.ground):
            raise InvalidArgument("matroid and hypergraph must share one ground set")
        w = dict(self.weights)
        if sorted(w) != list(self.matroid.ground):
            raise InvalidArgument("exactly one weight per ground element required")
        if any(x < 0 for x in w.values()):
            raise InvalidArgument("weights must be nonnegative")
        object.__setattr__(self, "_w", w)

    @property
    def ground(self) -> tuple[int, ...]:
        return self.matroid.ground

    @property
    def hyperedges(self) -> tuple[frozenset[int], ...]:
        return self.hyper.hyperedges

    @property
    def bounds(self) -> tuple[int, ...]:
        return self.hyper.bounds

    def weight(self, x: int) -> int:
        return self._w[x]

    def weight_of(self, s: Iterable[int]) -> int:
        return sum(self._w[x] for x in s)

    def is_feasible(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        if not s <= self.matroid.ground_set:
            raise InvalidArgument(f"unknown element ids {sorted(s - self.matroid.ground_set)}")
        counts: dict[int, int] = {}
        inc = self.hyper.incidence
        bounds = self.hyper.bounds
        for x in s:
            for j in inc[x]:
                c = counts.get(j, 0) + 1
                if c > bounds[j]:
                    return False
                counts[j] = c
        return self.matroid._independent(s)

    @property
    def degree(self) -> int:
        return self.hyper.max_degree

    @property
    def has_unit_bounds(self) -> bool:
        return all(b <= 1 for b in self.hyper.bounds)


def make_instance(
    matroid: Matroid,
    hyperedges: Sequence[Iterable[int]] = (),
    bounds: Sequence[int] | None = None,
    weights: Mapping[int, int] | None = None,
) -> DbmisInstance:
    """Build an instance; bounds default to 1 and weights to 1."""
    hyperedges = tuple(frozenset(e) for e in hyperedges)
    bounds = tuple(int(b) for b in bounds) if bounds is not None else (1,) * len(hyperedges)
    w = {x: 1 for x in matroid.ground}
    if weights is not None:
        unknown = set(weights) - set(w)
        if unknown:
            raise InvalidArgument(f"weights given for unknown ids {sorted(unknown)}")
        w.update({x: int(v) for x, v in weights.items()})
    hyper = BoundedHypergraph(matroid.ground, hyperedges, bounds)
    return DbmisInstance(matroid, hyper, tuple(sorted(w.items())))


def is_feasible(inst: DbmisInstance, s: Iterable[int]) -> bool:
    return inst.is_feasible(s)


def degree(inst: DbmisInstance) -> int:
    return inst.degree


def has_unit_bounds(inst: DbmisInstance) -> bool:
    return inst.has_unit_bounds


def weight_of(inst: DbmisInstance, s: Iterable[int]) -> int:
    return inst.weight_of(s)
