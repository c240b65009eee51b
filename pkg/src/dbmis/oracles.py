"""Brute-force oracles.

Everything in here is deliberately naive: plain subset enumeration and
textbook definitions, sharing no code with the solvers they are used to
check.  Only suitable for tiny inputs.
"""
from __future__ import annotations

from itertools import chain, combinations
from typing import Callable, Iterable, Sequence

__all__ = [
    "powerset",
    "matroid_axiom_failures",
    "rank_failures",
    "has_cycle_dfs",
    "brute_force_max",
    "extendibility_failures",
    "brute_max_matching_size",
]


def powerset(iterable: Iterable) -> Iterable[tuple]:
    s = list(iterable)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


def matroid_axiom_failures(m) -> list[str]:
    """Enumerate all subsets of ``m.ground`` and report violated axioms I1-I3."""
    subsets = [frozenset(s) for s in powerset(m.ground)]
    indep = {s for s in subsets if m.is_independent(s)}
    failures = []
    if frozenset() not in indep:
        failures.append("I1: empty set dependent")
    for y in indep:
        for x in y:
            if y - {x} not in indep:
                failures.append(f"I2: {sorted(y)} independent but {sorted(y - {x})} is not")
    by_size: dict[int, list[frozenset]] = {}
    for s in indep:
        by_size.setdefault(len(s), []).append(s)
    for x in indep:
        for size in range(len(x) + 1, len(m.ground) + 1):
            for y in by_size.get(size, ()):
                if not any(x | {e} in indep for e in y - x):
                    failures.append(f"I3: cannot extend {sorted(x)} from {sorted(y)}")
    return failures


def rank_failures(m) -> list[str]:
    subsets = [frozenset(s) for s in powerset(m.ground)]
    r = {s: m.rank(s) for s in subsets}
    failures = []
    if r[frozenset()] != 0:
        failures.append("rank(empty) != 0")
    for a in subsets:
        best = max(len(s) for s in subsets if s <= a and m.is_independent(s))
        if r[a] != best:
            failures.append(f"rank({sorted(a)}) = {r[a]} but largest independent subset has {best}")
        for b in subsets:
            if a <= b and r[a] > r[b]:
                failures.append(f"rank not monotone on {sorted(a)} <= {sorted(b)}")
            if r[a | b] + r[a & b] > r[a] + r[b]:
                failures.append(f"rank not submodular on {sorted(a)}, {sorted(b)}")
    return failures


def has_cycle_dfs(edges: Sequence[tuple[int, int]]) -> bool:
    """Recursive DFS cycle test on an undirected multigraph given as an edge list."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for idx, (u, v) in enumerate(edges):
        if u == v:
            return True
        adj.setdefault(u, []).append((v, idx))
        adj.setdefault(v, []).append((u, idx))
    visited: set[int] = set()

    def visit(x: int, via: int) -> bool:
        visited.add(x)
        for y, idx in adj[x]:
            if idx == via:
                continue
            if y in visited or visit(y, idx):
                return True
        return False

    return any(x not in visited and visit(x, -1) for x in list(adj))


def brute_force_max(
    items: Sequence[int], weights: Sequence[int], feasible: Callable[[frozenset], bool]
) -> tuple[int, frozenset]:
    """Best weight and a maximizer over *all* subsets, no pruning."""
    wmap = dict(zip(items, weights))
    best_w, best = -1, frozenset()
    for s in powerset(items):
        s = frozenset(s)
        if feasible(s):
            w = sum(wmap[x] for x in s)
            if w > best_w:
                best_w, best = w, s
    return best_w, best


def extendibility_failures(feasible: Callable[[frozenset], bool], ground: Sequence[int], k: int) -> list[str]:
    """Check the k-extendible exchange condition over every ``A <= B`` and ``x``."""
    fam = [frozenset(s) for s in powerset(ground) if feasible(frozenset(s))]
    famset = set(fam)
    failures = []
    for b in fam:
        for a in (frozenset(s) for s in powerset(sorted(b))):
            for x in ground:
                if x in b or a | {x} not in famset:
                    continue
                diff = sorted(b - a)
                ok = any(
                    (b | {x}) - set(z) in famset
                    for r in range(min(k, len(diff)) + 1)
                    for z in combinations(diff, r)
                )
                if not ok:
                    failures.append(f"A={sorted(a)} B={sorted(b)} x={x}")
    return failures


def brute_max_matching_size(edges: Sequence[tuple[int, int]]) -> int:
    best = 0
    for s in powerset(range(len(edges))):
        ends = [x for j in s for x in edges[j]]
        if len(ends) == len(set(ends)):
            best = max(best, len(s))
    return best
