"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

The lines are collected into a summary section at the end of the run, and
also printed directly (visible with ``pytest -s``).
"""
import subprocess
import sys
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES, FIXTURES

from dbmis.bench import run_ratio_suite
from dbmis.bmatching import is_g_b_matching, is_laminar, laminar_feasible, reduce_bmatching_to_hierarchical
from dbmis.branching import is_g_branching, out_colored_branching_matroids, reduce_colored_branching_to_dbmis
from dbmis.generators import gen_bmatching, gen_dbmis, gen_digraph, gen_ecgraph
from dbmis.instance import make_instance
from dbmis.io import parse
from dbmis.matroids import (
    make_copy,
    make_direct_sum,
    make_free,
    make_graphic,
    make_partition,
    make_restriction,
    make_uniform,
)
from dbmis.oracles import has_cycle_dfs, matroid_axiom_failures, powerset
from dbmis.parity import lift_solution, push_solution, reduce_dbmis_to_parity
from dbmis.pcforest import (
    algorithm1,
    is_exchange_closed,
    is_g_properly_colored,
    is_greedy_closed,
    make_ecgraph,
    reduce_gpf_to_dbmis,
    small_colors,
    solve_bundled_exact,
)
from dbmis.rng import SplitMix64
from dbmis.solvers import p_exchange_bound, solve_exact, solve_greedy, solve_p_exchange, solve_via_parity


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def random_ecgraphs(count, seed, max_edges, max_colors=3):
    rng = SplitMix64(seed)
    for _ in range(count):
        n = rng.between(2, 5)
        k = rng.between(1, max_colors)
        m = rng.between(0, min(max_edges, k * n * (n - 1) // 2))
        mode = "random" if rng.chance(0.5) else "unit"
        yield gen_ecgraph(rng.next_u64(), n, m, k, rng.choice([0.0, 0.5]), mode)


def hand_ecgraphs():
    for path in sorted(FIXTURES.glob("*.ecg")):
        yield parse(path.read_text()).instance
    yield make_ecgraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
    yield make_ecgraph(2, [(0, 1, 0), (0, 1, 1), (0, 1, 2)])


# -- 1 ----------------------------------------------------------------------


def axiom_matroids():
    rng = SplitMix64(11)
    for _ in range(6):
        nv = rng.between(2, 5)
        edges = []
        for _ in range(8):
            u = rng.below(nv)
            v = rng.below(nv - 1)
            edges.append((u, v + (v >= u)))
        g = make_graphic(nv, edges)
        yield "graphic", g
        yield "restriction", make_restriction(g, rng.sample(range(8), 5))
        yield "copy", make_copy(g, {j: 100 + 7 - j for j in range(8)})
    for r in range(5):
        yield "uniform", make_uniform(r, range(8))
    yield "free", make_free(range(8))
    yield "partition", make_partition([[0, 1, 2], [3, 4], [5]], [2, 1, 0], ground=range(8))
    yield "partition", make_partition([[0, 1, 2, 3], [4, 5, 6, 7]], [1, 3])
    yield "direct_sum", make_direct_sum(
        [make_uniform(2, [0, 1, 2, 3]), make_graphic(3, [(0, 1), (1, 2), (0, 2), (0, 1)], ids=[4, 5, 6, 7])]
    )
    tri = make_instance(make_graphic(3, [(0, 1), (1, 2)]), [[0, 1]])
    yield "reduction target", reduce_dbmis_to_parity(tri).target.matroid


def test_criterion_01_matroid_axioms():
    start = time.perf_counter()
    kinds, failures, count = set(), 0, 0
    for kind, m in axiom_matroids():
        assert len(m.ground) <= 8
        kinds.add(kind)
        failures += len(matroid_axiom_failures(m))
        count += 1
    elapsed = time.perf_counter() - start
    report(1, "matroid axioms I1-I3", failures == 0 and elapsed < 10,
           f"{count} oracles over {len(kinds)} kinds, {failures} failures, {elapsed:.2f}s < 10s")


# -- 2 ----------------------------------------------------------------------


def test_criterion_02_gpf_reduction():
    graphs = list(random_ecgraphs(520, 2, 6)) + list(hand_ecgraphs())
    mismatches = checked = 0
    for g in graphs:
        inst = reduce_gpf_to_dbmis(g)
        for F in powerset(range(g.m)):
            direct = is_g_properly_colored(g, F) and not has_cycle_dfs([g.edges[j][:2] for j in F])
            mismatches += inst.is_feasible(F) != direct
            checked += 1
    report(2, "properly colored forest reduction", mismatches == 0,
           f"{len(graphs)} graphs, {checked} subsets, {mismatches} mismatches")


# -- 3 ----------------------------------------------------------------------


def test_criterion_03_parity_round_trip():
    rng = SplitMix64(3)
    failures = sets = 0
    n_inst = 220
    for i in range(n_inst):
        inst = gen_dbmis(rng.next_u64(), rng.between(0, 5), rng.between(0, 3),
                         unit_bounds=bool(i % 2), max_weight=6)
        cert = reduce_dbmis_to_parity(inst)
        t = cert.target
        failures += any(len(ps) != inst.degree + 1 for ps in t.parity_sets)
        for s in powerset(inst.ground):
            if not inst.is_feasible(s):
                continue
            sets += 1
            c = push_solution(cert, s)
            ok = t.is_feasible(c) and t.weight_of(c) == inst.weight_of(s) and lift_solution(cert, c) == set(s)
            failures += not ok
        for c in powerset(range(len(t))):
            if t.is_feasible(c):
                s = lift_solution(cert, c)
                failures += not (inst.is_feasible(s) and push_solution(cert, s) == set(c))
    report(3, "parity reduction round trip", failures == 0,
           f"{n_inst} instances, {sets} feasible sets, {failures} failures")


# -- 4 ----------------------------------------------------------------------


def test_criterion_04_triangle():
    g = parse((FIXTURES / "mono_triangle.ecg").read_text()).instance
    inst = reduce_gpf_to_dbmis(g)
    values = (len(solve_exact(inst)), len(algorithm1(g)), len(solve_via_parity(inst, 1)))
    report(4, "monochromatic triangle", values == (1, 1, 1),
           f"exact/algorithm1/via-parity = {'/'.join(map(str, values))}")


# -- 5 ----------------------------------------------------------------------


def test_criterion_05_algorithm1_ratio():
    start = time.perf_counter()
    rng = SplitMix64(5)
    violations = not_closed = 0
    worst = Fraction(1)
    trials = 0
    while trials < 520:
        n = rng.between(3, 6)
        k = rng.between(1, 3)
        m = rng.between(0, min(10, k * n * (n - 1) // 2))
        g = gen_ecgraph(rng.next_u64(), n, m, k, rng.choice([0.0, 0.4, 0.8]))
        F = algorithm1(g).edges
        opt = len(solve_bundled_exact(g))
        violations += 3 * len(F) < opt
        not_closed += not (is_greedy_closed(g, F) and is_exchange_closed(g, F))
        if opt:
            worst = min(worst, Fraction(len(F), opt))
        trials += 1
    elapsed = time.perf_counter() - start
    report(5, "algorithm1 within 1/3", violations == 0 and not_closed == 0 and elapsed < 120,
           f"{trials} graphs, min ratio {worst}, {violations} violations, "
           f"{not_closed} closure failures, {elapsed:.1f}s < 120s")


# -- 6 ----------------------------------------------------------------------


def test_criterion_06_small_colors():
    details, ok = [], True
    for k, (num, den) in ((2, (4, 3)), (3, (2, 1))):
        rng = SplitMix64(60 + k)
        violations, worst = 0, Fraction(1)
        for _ in range(320):
            n = rng.between(3, 6)
            m = rng.between(0, min(10, k * n * (n - 1) // 2))
            g = gen_ecgraph(rng.next_u64(), n, m, k, rng.choice([0.0, 0.4]))
            got = len(small_colors(g))
            opt = len(solve_bundled_exact(g))
            violations += num * got < den * opt
            if opt:
                worst = min(worst, Fraction(got, opt))
        ok &= violations == 0
        details.append(f"k={k}: 320 graphs, min {worst}, {violations} violations")
    report(6, "small-colors ratios", ok, "; ".join(details))


# -- 7 ----------------------------------------------------------------------


def test_criterion_07_p_exchange():
    rng = SplitMix64(7)
    violations = runs = 0
    worst = {1: Fraction(1), 2: Fraction(1), 3: Fraction(1)}
    for _ in range(320):
        n = rng.between(1, 10)
        inst = gen_dbmis(rng.next_u64(), n, rng.between(1, 3), unit_bounds=True, max_weight=9,
                         n_hyperedges=rng.between(n // 2, 2 * n))
        assert inst.degree <= 3 and inst.has_unit_bounds
        opt = inst.weight_of(solve_exact(inst))
        for p in (1, 2, 3):
            got = inst.weight_of(solve_p_exchange(inst, p))
            runs += 1
            violations += Fraction(got) < p_exchange_bound(inst.degree, p) * opt
            if opt:
                worst[p] = min(worst[p], Fraction(got, opt))
    report(7, "p-exchange within 1/(Delta+1/p)", violations == 0,
           f"320 instances x p=1,2,3, min ratios {worst[1]}, {worst[2]}, {worst[3]}, {violations} violations")


# -- 8 ----------------------------------------------------------------------


def unit_weight_suite():
    rng = SplitMix64(8)
    for _ in range(300):
        yield gen_dbmis(rng.next_u64(), rng.between(0, 10), rng.between(0, 3), unit_bounds=bool(rng.below(2)))
    for g in random_ecgraphs(150, 81, 10):
        yield reduce_gpf_to_dbmis(g)
    for _ in range(150):
        yield reduce_colored_branching_to_dbmis(gen_digraph(rng.next_u64(), rng.between(2, 5), rng.between(0, 8),
                                                            rng.between(1, 3), "random"))


def test_criterion_08_greedy():
    violations = count = 0
    for inst in unit_weight_suite():
        assert all(inst.weight(x) == 1 for x in inst.ground)
        violations += (inst.degree + 1) * len(solve_greedy(inst)) < len(solve_exact(inst))
        count += 1
    report(8, "greedy within 1/(Delta+1)", violations == 0, f"{count} instances, {violations} violations")


# -- 9 ----------------------------------------------------------------------


def test_criterion_09_branchings():
    rng = SplitMix64(9)
    digraphs = [gen_digraph(rng.next_u64(), rng.between(2, 5), rng.between(0, 5), rng.between(1, 3),
                            "random" if rng.chance(0.5) else "unit") for _ in range(320)]
    digraphs.append(parse((FIXTURES / "mono_dicycle.dig").read_text()).instance)
    mismatches = three = big_degree = 0
    for d in digraphs:
        inst = reduce_colored_branching_to_dbmis(d)
        big_degree += inst.degree > 3
        ms = out_colored_branching_matroids(d)
        for F in powerset(range(d.m)):
            mismatches += inst.is_feasible(F) != is_g_branching(d, F, "colored")
            three += all(m.is_independent(F) for m in ms) != is_g_branching(d, F, "out-colored")
    report(9, "branching reductions", mismatches == three == big_degree == 0,
           f"{len(digraphs)} digraphs, {mismatches} colored mismatches, "
           f"{three} three-matroid mismatches, {big_degree} with degree > 3")


# -- 10 ---------------------------------------------------------------------


def test_criterion_10_bmatching():
    rng = SplitMix64(10)
    mismatches = graphs = 0
    for _ in range(220):
        n = rng.between(2, 5)
        k = rng.between(1, 3)
        m = rng.between(0, min(6, k * n * (n - 1) // 2))
        bm = gen_bmatching(rng.next_u64(), n, m, k, 0.4, "random" if rng.chance(0.5) else "unit", 5)
        g, b = bm.graph, bm.b
        h = reduce_bmatching_to_hierarchical(g, b)
        degree_sum = sum(sum(v in e[:2] for e in g.edges) for v in range(g.n))
        mismatches += h.n_vertices != degree_sum or not is_laminar(L.members for L in h.family)
        for F in powerset(range(g.m)):
            mismatches += laminar_feasible(h, F) != is_g_b_matching(g, b, F)
            mismatches += h.weight_of(F) != g.weight_of(F)
        graphs += 1
    report(10, "hierarchical b-matching bijection", mismatches == 0,
           f"{graphs} graphs, {mismatches} mismatches")


# -- 11 ---------------------------------------------------------------------


def test_criterion_11_parity_report():
    rep = run_ratio_suite("parity", 300, 11, {"t": 2})
    worst = rep.min_ratio
    target = "met" if worst >= Fraction(66, 100) else "not met"
    report(11, "via-parity t=2 (hard gate 1/3, target 0.66 report-only)",
           rep.violations == 0 and worst >= Fraction(1, 3),
           f"{len(rep.rows)} instances, min ratio {worst} = {float(worst):.3f}, target {target}")


# -- 12 ---------------------------------------------------------------------

CLI_RUNS = [
    ["gen", "--kind", "ecgraph", "--seed", "12", "--n", "5", "--m", "8", "--k", "3", "--parallel-prob", "0.3"],
    ["gen", "--kind", "digraph", "--seed", "12", "--bound-mode", "random"],
    ["gen", "--kind", "bmatching", "--seed", "12"],
    ["gen", "--kind", "dbmis", "--seed", "12", "--n", "7", "--max-weight", "5"],
    ["solve", str(FIXTURES / "swap_fires.ecg"), "--alg", "algorithm1"],
    ["solve", str(FIXTURES / "small.dbm"), "--alg", "via-parity"],
    ["reduce", str(FIXTURES / "small.dbm"), "--from", "dbmis"],
    ["oracle", str(FIXTURES / "bundles.ecg"), "--bundles"],
    ["bench", "--suite", "p-exchange", "--trials", "15", "--seed", "12", "--p", "2"],
]


def test_criterion_12_cli_determinism():
    differing = []
    for argv in CLI_RUNS:
        outs = [
            subprocess.run([sys.executable, "-m", "dbmis.cli", *argv], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        if outs[0] != outs[1] or not outs[0]:
            differing.append(argv[0])
    report(12, "CLI byte determinism", not differing,
           f"{len(CLI_RUNS)} invocations run twice, {len(differing)} differ")
