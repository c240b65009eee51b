"""Command-line interface: ``dbmis gen | solve | reduce | oracle | bench``.

Exit status: 0 on success, 1 on runtime errors (bad files, infeasible
requests, hard-bound violations in ``bench``), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import SUITES, run_ratio_suite
from .bmatching import (
    reduce_bmatching_to_hierarchical,
    solve_bmatching_exact,
    solve_hierarchical_exact,
)
from .branching import MODES, reduce_colored_branching_to_dbmis, solve_branching_exact
from .errors import DbmisError
from .generators import BOUND_MODES, MATROID_KINDS, gen_bmatching, gen_dbmis, gen_digraph, gen_ecgraph
from .io import Solution, parse, render, render_solution
from .parity import (
    reduce_dbmis_to_parity,
    solve_parity_exact,
    solve_parity_greedy,
    solve_parity_local,
)
from .pcforest import algorithm1, reduce_gpf_to_dbmis, small_colors, solve_bundled_exact, solve_gpf_exact
from .solvers import solve_exact, solve_greedy, solve_p_exchange, solve_via_parity

DBMIS_ALGS = ("exact", "greedy", "p-exchange", "via-parity")
ALGS = {
    "dbmis": DBMIS_ALGS,
    "ecgraph": ("algorithm1", "small-colors", "gpf-exact", "bundled-exact") + DBMIS_ALGS,
    "digraph": ("branching-exact",) + DBMIS_ALGS,
    "bmatching": ("exact",),
    "parity": ("exact", "greedy", "local"),
    "hier": ("exact",),
}
ALL_ALGS = sorted({a for algs in ALGS.values() for a in algs})

REDUCTIONS = {"gpf": "ecgraph", "dbmis": "dbmis", "branching": "digraph", "bmatch": "bmatching"}


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _solve_dbmis(inst, alg: str, args) -> frozenset[int]:
    if alg == "exact":
        return solve_exact(inst, cap=args.cap)
    if alg == "greedy":
        return solve_greedy(inst)
    if alg == "p-exchange":
        return solve_p_exchange(inst, args.p, max_remove=args.max_remove)
    return solve_via_parity(inst, args.t, max_remove=args.max_remove)


def _solve(kind: str, obj, alg: str, args) -> tuple[frozenset[int], int]:
    if alg not in ALGS[kind]:
        raise DbmisError(f"algorithm '{alg}' does not apply to {kind} instances; choose from {', '.join(ALGS[kind])}")
    if kind == "dbmis":
        out = _solve_dbmis(obj, alg, args)
        return out, obj.weight_of(out)
    if kind == "ecgraph":
        if alg == "algorithm1":
            out = algorithm1(obj).edges
        elif alg == "small-colors":
            out = small_colors(obj).edges
        elif alg == "gpf-exact":
            out = solve_gpf_exact(obj, cap=args.cap)
        elif alg == "bundled-exact":
            out = solve_bundled_exact(obj, cap=args.cap)
        else:
            out = _solve_dbmis(reduce_gpf_to_dbmis(obj), alg, args)
        return out, obj.weight_of(out)
    if kind == "digraph":
        if alg == "branching-exact":
            out = solve_branching_exact(obj, args.mode, cap=args.cap)
        else:
            out = _solve_dbmis(reduce_colored_branching_to_dbmis(obj), alg, args)
        return out, obj.weight_of(out)
    if kind == "bmatching":
        out = solve_bmatching_exact(obj.graph, obj.b, cap=args.cap)
        return out, obj.graph.weight_of(out)
    if kind == "parity":
        if alg == "exact":
            out = solve_parity_exact(obj, cap=args.cap)
        elif alg == "greedy":
            out = solve_parity_greedy(obj)
        else:
            out = solve_parity_local(obj, args.t, max_remove=args.max_remove)
        return out, obj.weight_of(out)
    out = solve_hierarchical_exact(obj, cap=args.cap)
    return out, obj.weight_of(out)


ORACLE_ALG = {
    "dbmis": "exact",
    "ecgraph": "gpf-exact",
    "digraph": "branching-exact",
    "bmatching": "exact",
    "parity": "exact",
    "hier": "exact",
}


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    if args.kind == "ecgraph":
        obj = gen_ecgraph(args.seed, args.n, args.m, args.k, args.parallel_prob, args.bound_mode, args.max_weight)
    elif args.kind == "digraph":
        obj = gen_digraph(args.seed, args.n, args.m, args.k, args.bound_mode, args.max_weight)
    elif args.kind == "bmatching":
        obj = gen_bmatching(args.seed, args.n, args.m, args.k, args.parallel_prob, args.bound_mode, args.max_weight)
    else:
        obj = gen_dbmis(
            args.seed, args.n, args.max_degree, unit_bounds=args.bound_mode == "unit",
            max_weight=args.max_weight, matroid_kind=args.matroid,
        )
    _write(render(obj), args.output)
    return 0


def cmd_solve(args) -> int:
    f = parse(_read(args.instance))
    out, weight = _solve(f.kind, f.instance, args.alg, args)
    _write(render_solution(Solution(args.alg, f.kind, tuple(sorted(out)), weight)), args.output)
    return 0


def cmd_oracle(args) -> int:
    f = parse(_read(args.instance))
    alg = ORACLE_ALG[f.kind]
    if f.kind == "ecgraph" and args.bundles:
        alg = "bundled-exact"
    out, weight = _solve(f.kind, f.instance, alg, args)
    _write(render_solution(Solution(alg, f.kind, tuple(sorted(out)), weight)), args.output)
    return 0


def cmd_reduce(args) -> int:
    f = parse(_read(args.instance))
    expected = REDUCTIONS[args.source]
    if f.kind != expected:
        raise DbmisError(f"--from {args.source} needs a {expected} instance, got {f.kind}")
    obj = f.instance
    if args.source == "gpf":
        target = reduce_gpf_to_dbmis(obj)
        text = render(target, "element->edge", [(j, j) for j in target.ground])
    elif args.source == "branching":
        target = reduce_colored_branching_to_dbmis(obj)
        text = render(target, "element->arc", [(j, j) for j in target.ground])
    elif args.source == "dbmis":
        cert = reduce_dbmis_to_parity(obj)
        text = render(cert.target, "set->element", list(enumerate(cert.source_of)))
    else:
        h = reduce_bmatching_to_hierarchical(obj.graph, obj.b)
        text = render(h, "edge->edge", [(j, j) for j in range(len(h.edges))])
    _write(text, args.output)
    return 0


def cmd_bench(args) -> int:
    params = {}
    for name in ("p", "t", "max_edges", "max_elements"):
        value = getattr(args, name)
        if value is not None and name in SUITES[args.suite].defaults:
            params[name] = value
    if args.solver is not None:
        params["solver"] = args.solver
    report = run_ratio_suite(args.suite, args.trials, args.seed, params)
    if args.format in ("csv", "both"):
        _write(report.to_csv(), args.csv)
    if args.format in ("text", "both"):
        sys.stdout.write(report.to_text())
    return 1 if report.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbmis",
        description="Degree bounded matroid independent sets, properly colored forests, branchings and b-matchings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a random instance file")
    g.add_argument("--kind", choices=("ecgraph", "digraph", "bmatching", "dbmis"), default="ecgraph")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=5, help="vertices (graphs) or elements (dbmis)")
    g.add_argument("--m", type=int, default=6, help="edges or arcs")
    g.add_argument("--k", type=int, default=2, help="number of colors")
    g.add_argument("--parallel-prob", type=float, default=0.0)
    g.add_argument("--bound-mode", choices=BOUND_MODES, default="unit")
    g.add_argument("--max-weight", type=int, default=1)
    g.add_argument("--max-degree", type=int, default=2, help="hypergraph degree cap (dbmis)")
    g.add_argument("--matroid", choices=MATROID_KINDS, default=None, help="matroid kind (dbmis)")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    def solver_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--p", type=int, default=2, help="p-exchange size; p = ceil(1/eps) gives ratio 1/(Delta+eps)")
        p.add_argument("--t", type=int, default=2, help="parity exchange size")
        p.add_argument("--max-remove", type=int, default=None, help="removal cap for local search")
        p.add_argument("--mode", choices=MODES, default="colored", help="branching color mode")
        p.add_argument("--cap", type=int, default=20, help="size cap for exact enumeration")
        p.add_argument("-o", "--output")

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("instance")
    s.add_argument("--alg", required=True, choices=ALL_ALGS)
    solver_opts(s)
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="emit the reduced instance plus its id mapping")
    r.add_argument("instance")
    r.add_argument("--from", dest="source", required=True, choices=sorted(REDUCTIONS))
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_reduce)

    o = sub.add_parser("oracle", help="exact solve by enumeration")
    o.add_argument("instance")
    o.add_argument("--bundles", action="store_true", help="ecgraph: allow bundles of parallel edges")
    solver_opts(o)
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="ratio suite against the exact oracle")
    b.add_argument("--suite", required=True, choices=sorted(SUITES))
    b.add_argument("--trials", type=int, default=50)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--p", type=int, default=None)
    b.add_argument("--t", type=int, default=None)
    b.add_argument("--solver", choices=("greedy", "via-parity"), default=None, help="branching suite only")
    b.add_argument("--max-edges", type=int, default=None)
    b.add_argument("--max-elements", type=int, default=None)
    b.add_argument("--format", choices=("csv", "text", "both"), default="both")
    b.add_argument("--csv", default=None, help="write the CSV rows here instead of stdout")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DbmisError, OSError) as exc:
        print(f"dbmis {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
