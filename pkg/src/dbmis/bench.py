"""Ratio experiments: solver value against the exact optimum, as exact rationals.

Each suite draws ``trials`` random instances from a SplitMix64 stream seeded
with ``seed``, solves them exactly and with the suite's solver, and records
``value / optimum``.  Hard bounds are the guarantees proven for the shipped
algorithms; rows below them are counted as violations.  Suites may also
carry a report-only target.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .branching import reduce_colored_branching_to_dbmis
from .errors import InvalidArgument
from .generators import gen_dbmis, gen_digraph, gen_ecgraph
from .pcforest import algorithm1, reduce_gpf_to_dbmis, small_colors, solve_bundled_exact
from .rng import SplitMix64
from .solvers import (
    greedy_bound,
    p_exchange_bound,
    solve_exact,
    solve_greedy,
    solve_p_exchange,
    solve_via_parity,
)

__all__ = ["Row", "ExperimentReport", "SUITES", "run_ratio_suite", "fmt_ratio"]


def fmt_ratio(q: Fraction | None) -> str:
    if q is None:
        return "-"
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Row:
    instance: int
    seed: int
    solver: str
    params: str
    delta: int
    value: int
    optimum: int
    bound: Fraction | None

    @property
    def ratio(self) -> Fraction:
        return Fraction(1) if self.optimum == 0 else Fraction(self.value, self.optimum)

    @property
    def violation(self) -> bool:
        return self.bound is not None and self.ratio < self.bound


@dataclass
class ExperimentReport:
    suite: str
    seed: int
    params: dict
    rows: list[Row] = field(default_factory=list)
    target: Fraction | None = None

    @property
    def violations(self) -> int:
        return sum(r.violation for r in self.rows)

    @property
    def min_ratio(self) -> Fraction | None:
        return min((r.ratio for r in self.rows), default=None)

    @property
    def mean_ratio(self) -> Fraction | None:
        if not self.rows:
            return None
        return sum((r.ratio for r in self.rows), Fraction(0)) / len(self.rows)

    @property
    def target_met(self) -> bool | None:
        if self.target is None or not self.rows:
            return None
        return self.min_ratio >= self.target

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["instance", "seed", "solver", "params", "delta", "value", "optimum", "ratio", "bound", "violation"])
        for r in sorted(self.rows, key=lambda r: r.instance):
            writer.writerow(
                [r.instance, r.seed, r.solver, r.params, r.delta, r.value, r.optimum,
                 fmt_ratio(r.ratio), fmt_ratio(r.bound), int(r.violation)]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [
            f"suite {self.suite}",
            f"seed {self.seed}",
            f"params {params or '-'}",
            f"trials {len(self.rows)}",
            f"min_ratio {fmt_ratio(self.min_ratio)}",
            f"mean_ratio {fmt_ratio(self.mean_ratio)}",
            f"violations {self.violations}",
        ]
        if self.target is not None:
            met = self.target_met
            lines.append(f"target {fmt_ratio(self.target)} (report only)")
            lines.append(f"target_met {'-' if met is None else str(met).lower()}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# suites: each cell maps (instance seed, params) to (delta, value, optimum, bound)

Cell = Callable[[int, dict], tuple[int, int, int, Fraction | None]]


def _edge_count(rng: SplitMix64, n: int, k: int, max_edges: int) -> int:
    # biased toward dense instances; sparse ones are mostly solved optimally
    cap = min(max_edges, k * n * (n - 1) // 2)
    return rng.between(min(cap, 4), cap)


def _sizes(rng: SplitMix64, max_edges: int, max_colors: int):
    n = rng.between(3, 6)
    k = rng.between(1, max_colors)
    return n, _edge_count(rng, n, k, max_edges), k


def _algorithm1(seed: int, params: dict):
    rng = SplitMix64(seed)
    n, m, k = _sizes(rng, params.get("max_edges", 10), 3)
    g = gen_ecgraph(rng.next_u64(), n, m, k, parallel_prob=0.4)
    F = algorithm1(g)
    return 0, len(F), len(solve_bundled_exact(g)), Fraction(1, 3)


def _small_colors(k: int) -> Cell:
    bound = Fraction(3, 4) if k == 2 else Fraction(1, 2)

    def cell(seed: int, params: dict):
        rng = SplitMix64(seed)
        n = rng.between(3, 6)
        m = _edge_count(rng, n, k, params.get("max_edges", 10))
        g = gen_ecgraph(rng.next_u64(), n, m, k, parallel_prob=0.4)
        return 0, len(small_colors(g)), len(solve_bundled_exact(g)), bound

    return cell


def _p_exchange(seed: int, params: dict):
    rng = SplitMix64(seed)
    p = params.get("p", 1)
    n = rng.between(1, params.get("max_elements", 10))
    inst = gen_dbmis(
        rng.next_u64(), n, rng.between(1, 3), unit_bounds=True, max_weight=9,
        n_hyperedges=rng.between(n // 2, 2 * n),
    )
    out = solve_p_exchange(inst, p)
    opt = solve_exact(inst)
    return inst.degree, inst.weight_of(out), inst.weight_of(opt), p_exchange_bound(inst.degree, p)


def _greedy(seed: int, params: dict):
    rng = SplitMix64(seed)
    n = rng.between(1, params.get("max_elements", 10))
    inst = gen_dbmis(
        rng.next_u64(), n, rng.between(0, 3), unit_bounds=bool(rng.below(2)),
        n_hyperedges=rng.between(0, 2 * n),
    )
    out = solve_greedy(inst)
    return inst.degree, len(out), len(solve_exact(inst)), greedy_bound(inst.degree)


def _parity(seed: int, params: dict):
    rng = SplitMix64(seed)
    n, m, k = _sizes(rng, params.get("max_edges", 10), 3)
    g = gen_ecgraph(rng.next_u64(), n, m, k)
    inst = reduce_gpf_to_dbmis(g)
    out = solve_via_parity(inst, params.get("t", 2))
    # the hard gate is the greedy seed's 1/(Delta+1), i.e. 1/3 here
    return inst.degree, len(out), len(solve_exact(inst)), Fraction(1, 3)


def _branching(seed: int, params: dict):
    rng = SplitMix64(seed)
    n = rng.between(2, 5)
    m = rng.between(min(4, params.get("max_edges", 8)), params.get("max_edges", 8))
    d = gen_digraph(rng.next_u64(), n, m, rng.between(1, 3))
    inst = reduce_colored_branching_to_dbmis(d)
    if params.get("solver", "greedy") == "greedy":
        out = solve_greedy(inst)
    else:
        out = solve_via_parity(inst, params.get("t", 2))
    return inst.degree, len(out), len(solve_exact(inst)), greedy_bound(inst.degree)


@dataclass(frozen=True)
class Suite:
    solver: str
    cell: Cell
    defaults: dict
    target: Fraction | None = None


SUITES: dict[str, Suite] = {
    "algorithm1": Suite("algorithm1", _algorithm1, {"max_edges": 10}),
    "small-colors-k2": Suite("small-colors", _small_colors(2), {"max_edges": 10}),
    "small-colors-k3": Suite("small-colors", _small_colors(3), {"max_edges": 10}),
    "p-exchange": Suite("p-exchange", _p_exchange, {"p": 1, "max_elements": 10}),
    "greedy": Suite("greedy", _greedy, {"max_elements": 10}),
    "parity": Suite("via-parity", _parity, {"t": 2, "max_edges": 10}, target=Fraction(2, 3)),
    "branching": Suite("greedy", _branching, {"solver": "greedy", "t": 2, "max_edges": 8}, target=Fraction(1, 2)),
}


def run_ratio_suite(suite: str, trials: int, seed: int, params: dict | None = None) -> ExperimentReport:
    """Run ``trials`` random cells of ``suite``; rows are ordered by instance id."""
    if suite not in SUITES:
        raise InvalidArgument(f"unknown suite '{suite}', choose from {sorted(SUITES)}")
    if trials < 0:
        raise InvalidArgument("trials must be nonnegative")
    spec = SUITES[suite]
    merged = {**spec.defaults, **(params or {})}
    unknown = set(merged) - set(spec.defaults)
    if unknown:
        raise InvalidArgument(f"suite '{suite}' does not take parameters {sorted(unknown)}")
    solver = merged.get("solver", spec.solver) if suite == "branching" else spec.solver
    shown = ";".join(f"{k}={v}" for k, v in sorted(merged.items()) if k in ("p", "t", "solver"))
    report = ExperimentReport(suite, seed, merged, target=spec.target)
    stream = SplitMix64(seed)
    for i in range(trials):
        cell_seed = stream.next_u64()
        delta, value, opt, bound = spec.cell(cell_seed, merged)
        report.rows.append(Row(i, cell_seed, solver, shown, delta, value, opt, bound))
    return report
