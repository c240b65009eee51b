"""Independence-oracle matroids.

Every matroid here is an immutable object over a finite ground set of
nonnegative integer ids.  The only way to look inside one is
:meth:`Matroid.is_independent`; :meth:`Matroid.rank` is derived from it by
greedy augmentation in ascending id order.

Constructors (``make_*``) validate their payload and are the intended entry
points; the classes themselves are exposed for ``isinstance`` checks and for
the instance file format.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidArgument

__all__ = [
    "Matroid",
    "GraphicMatroid",
    "UniformMatroid",
    "FreeMatroid",
    "PartitionMatroid",
    "DirectSum",
    "Restriction",
    "Copy",
    "make_graphic",
    "make_uniform",
    "make_free",
    "make_partition",
    "make_direct_sum",
    "make_restriction",
    "make_copy",
    "is_independent",
    "rank",
]


def _as_idset(s: Iterable[int]) -> frozenset[int]:
    if isinstance(s, frozenset):
        return s
    return frozenset(s)


class Matroid:
    """Common oracle interface.  Subclasses implement ``_independent``."""

    kind: str = "abstract"

    @property
    def ground(self) -> tuple[int, ...]:
        return self._ground  # type: ignore[attr-defined]

    @property
    def ground_set(self) -> frozenset[int]:
        return self._ground_set  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.ground)

    def _init_ground(self, elements: Iterable[int]) -> None:
        elems = tuple(sorted(set(elements)))
        for x in elems:
            if not isinstance(x, int) or x < 0:
                raise InvalidArgument(f"element ids must be nonnegative integers, got {x!r}")
        object.__setattr__(self, "_ground", elems)
        object.__setattr__(self, "_ground_set", frozenset(elems))

    def _check(self, s: Iterable[int]) -> frozenset[int]:
        s = _as_idset(s)
        if not s <= self._ground_set:  # type: ignore[attr-defined]
            unknown = sorted(s - self._ground_set)  # type: ignore[attr-defined]
            raise InvalidArgument(f"unknown element ids {unknown} for {self.kind} matroid")
        return s

    def is_independent(self, s: Iterable[int]) -> bool:
        return self._independent(self._check(s))

    def _independent(self, s: frozenset[int]) -> bool:
        raise NotImplementedError

    def rank(self, s: Iterable[int] | None = None) -> int:
        """Size of a maximum independent subset of ``s`` (default: the ground set)."""
        s = self._ground_set if s is None else self._check(s)  # type: ignore[attr-defined]
        basis: set[int] = set()
        for x in sorted(s):
            basis.add(x)
            if not self._independent(frozenset(basis)):
                basis.discard(x)
        return len(basis)


class _DSU:
    __slots__ = ("parent",)

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True, eq=True)
class GraphicMatroid(Matroid):
    """Cycle matroid of a loopless multigraph; element ``ids[j]`` is edge ``edges[j]``."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    ids: tuple[int, ...]
    _endpoints: dict = field(default=None, compare=False, repr=False)  # type: ignore[assignment]
    kind = "graphic"

    def __post_init__(self) -> None:
        self._init_ground(self.ids)
        object.__setattr__(self, "_endpoints", dict(zip(self.ids, self.edges)))

    def _independent(self, s: frozenset[int]) -> bool:
        dsu = _DSU()
        ends = self._endpoints
        for x in s:
            u, v = ends[x]
            if not dsu.union(u, v):
                return False
        return True


@dataclass(frozen=True, eq=True)
class UniformMatroid(Matroid):
    r: int
    elements: tuple[int, ...]
    kind = "uniform"

    def __post_init__(self) -> None:
        self._init_ground(self.elements)

    def _independent(self, s: frozenset[int]) -> bool:
        return len(s) <= self.r


@dataclass(frozen=True, eq=True)
class FreeMatroid(Matroid):
    elements: tuple[int, ...]
    kind = "free"

    def __post_init__(self) -> None:
        self._init_ground(self.elements)

    def _independent(self, s: frozenset[int]) -> bool:
        return True


@dataclass(frozen=True, eq=True)
class PartitionMatroid(Matroid):
    """Parts with capacities; ground elements outside every part are unconstrained."""

    parts: tuple[frozenset[int], ...]
    capacities: tuple[int, ...]
    elements: tuple[int, ...]
    _part_of: dict = field(default=None, compare=False, repr=False)  # type: ignore[assignment]
    kind = "partition"

    def __post_init__(self) -> None:
        self._init_ground(self.elements)
        part_of = {}
        for j, part in enumerate(self.parts):
            for x in part:
                part_of[x] = j
        object.__setattr__(self, "_part_of", part_of)

    def _independent(self, s: frozenset[int]) -> bool:
        counts = [0] * len(self.parts)
        part_of = self._part_of
        caps = self.capacities
        for x in s:
            j = part_of.get(x)
            if j is None:
                continue
            counts[j] += 1
            if counts[j] > caps[j]:
                return False
        return True


@dataclass(frozen=True, eq=True)
class DirectSum(Matroid):
    children: tuple[Matroid, ...]
    _owner: dict = field(default=None, compare=False, repr=False)  # type: ignore[assignment]
    kind = "direct_sum"

    def __post_init__(self) -> None:
        owner: dict[int, int] = {}
        for j, child in enumerate(self.children):
            for x in child.ground:
                if x in owner:
                    raise InvalidArgument(f"direct sum children overlap on element {x}")
                owner[x] = j
        self._init_ground(owner)
        object.__setattr__(self, "_owner", owner)

    def _independent(self, s: frozenset[int]) -> bool:
        buckets: dict[int, list[int]] = {}
        owner = self._owner
        for x in s:
            buckets.setdefault(owner[x], []).append(x)
        children = self.children
        return all(children[j]._independent(frozenset(xs)) for j, xs in buckets.items())


@dataclass(frozen=True, eq=True)
class Restriction(Matroid):
    child: Matroid
    allowed: tuple[int, ...]
    kind = "restriction"

    def __post_init__(self) -> None:
        if not set(self.allowed) <= self.child.ground_set:
            raise InvalidArgument("restriction set must be a subset of the child's ground set")
        self._init_ground(self.allowed)

    def _independent(self, s: frozenset[int]) -> bool:
        return self.child._independent(s)


@dataclass(frozen=True, eq=True)
class Copy(Matroid):
    """Isomorphic copy of ``child`` under the relabeling ``new -> old``."""

    child: Matroid
    relabel: tuple[tuple[int, int], ...]
    _back: dict = field(default=None, compare=False, repr=False)  # type: ignore[assignment]
    kind = "copy"

    def __post_init__(self) -> None:
        back = dict(self.relabel)
        if len(back) != len(self.relabel):
            raise InvalidArgument("copy relabeling repeats a new id")
        if sorted(back.values()) != list(self.child.ground):
            raise InvalidArgument("copy relabeling must be a bijection onto the child's ground set")
        self._init_ground(back)
        object.__setattr__(self, "_back", back)

    def _independent(self, s: frozenset[int]) -> bool:
        back = self._back
        return self.child._independent(frozenset(back[x] for x in s))


# ---------------------------------------------------------------------------
# constructors


def make_graphic(
    vertices: int,
    edges: Sequence[tuple[int, int]],
    ids: Sequence[int] | None = None,
) -> GraphicMatroid:
    """Graphic matroid of a multigraph on ``range(vertices)``.

    Edge ``j`` gets element id ``ids[j]`` (default ``j``).  Loops are rejected.
    """
    edges = tuple((int(u), int(v)) for u, v in edges)
    for u, v in edges:
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InvalidArgument(f"edge ({u}, {v}) has an endpoint outside 0..{vertices - 1}")
        if u == v:
            raise InvalidArgument(f"loop at vertex {u}; graphs must be loopless")
    ids = tuple(range(len(edges))) if ids is None else tuple(ids)
    if len(ids) != len(edges) or len(set(ids)) != len(ids):
        raise InvalidArgument("edge ids must be distinct and one per edge")
    return GraphicMatroid(vertices, edges, ids)


def make_uniform(r: int, elements: Iterable[int]) -> UniformMatroid:
    if r < 0:
        raise InvalidArgument("uniform matroid rank must be nonnegative")
    return UniformMatroid(r, tuple(sorted(set(elements))))


def make_free(elements: Iterable[int]) -> FreeMatroid:
    return FreeMatroid(tuple(sorted(set(elements))))


def make_partition(
    parts: Sequence[Iterable[int]],
    capacities: Sequence[int],
    ground: Iterable[int] | None = None,
) -> PartitionMatroid:
    """Partition matroid.  Elements of ``ground`` not in any part have no cap."""
    parts_t = tuple(frozenset(p) for p in parts)
    caps = tuple(int(c) for c in capacities)
    if len(parts_t) != len(caps):
        raise InvalidArgument("one capacity per part required")
    if any(c < 0 for c in caps):
        raise InvalidArgument("capacities must be nonnegative")
    seen: set[int] = set()
    for p in parts_t:
        if seen & p:
            raise InvalidArgument(f"partition parts overlap on {sorted(seen & p)}")
        seen |= p
    elements = seen | set(ground or ())
    return PartitionMatroid(parts_t, caps, tuple(sorted(elements)))


def make_direct_sum(children: Sequence[Matroid]) -> DirectSum:
    """Direct sum; nested sums are flattened."""
    flat: list[Matroid] = []
    for child in children:
        if isinstance(child, DirectSum):
            flat.extend(child.children)
        else:
            flat.append(child)
    return DirectSum(tuple(flat))


def make_restriction(m: Matroid, allowed: Iterable[int]) -> Restriction:
    return Restriction(m, tuple(sorted(set(allowed))))


def make_copy(m: Matroid, new_of_old: dict[int, int]) -> Copy:
    """Relabel ``m`` by the map ``old id -> new id``."""
    return Copy(m, tuple(sorted((new, old) for old, new in new_of_old.items())))


def is_independent(m: Matroid, s: Iterable[int]) -> bool:
    return m.is_independent(s)


def rank(m: Matroid, s: Iterable[int] | None = None) -> int:
    return m.rank(s)
