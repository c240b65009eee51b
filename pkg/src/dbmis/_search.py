"""Pruned enumeration over downward-closed set families."""
from __future__ import annotations

from typing import Callable, Sequence

from .errors import ResourceLimit


def best_subset(
    items: Sequence[int],
    weights: Sequence[int],
    feasible: Callable[[list[int]], bool],
    cap: int,
    what: str = "elements",
) -> tuple[int, ...]:
    """Maximum-weight feasible subset of ``items`` (weights nonnegative).

    ``feasible`` must be downward closed.  Subsets are visited depth-first in
    lexicographic order of their item-position tuples and only a strict
    improvement replaces the incumbent, so ties resolve to the
    lexicographically smallest subset; branches that can at best tie are cut.
    """
    n = len(items)
    if n > cap:
        raise ResourceLimit(f"{n} {what} exceed the exact-solver cap of {cap}")
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + weights[j]
    best_w = -1
    best: tuple[int, ...] = ()
    chosen: list[int] = []

    def dfs(start: int, cur: int) -> None:
        nonlocal best_w, best
        if cur > best_w:
            best_w, best = cur, tuple(chosen)
        for j in range(start, n):
            if cur + suffix[j] <= best_w:
                return
            chosen.append(items[j])
            if feasible(chosen):
                dfs(j + 1, cur + weights[j])
            chosen.pop()

    dfs(0, 0)
    return best
