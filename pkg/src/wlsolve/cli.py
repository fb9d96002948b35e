"""Command-line interface.

Exit codes: 0 success (or convergence), 1 bad input, 2 iteration cap reached,
3 oracle verification found a discrepancy.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Callable, Sequence

from .degree import SystemKind, sd
from .lattice import FiniteLattice, LatticeError
from .network import FuzzyNetwork, aggregate
from .oracle import (
    BudgetExceededError,
    EnumerationSpec,
    check_cut_agreement,
    enumerate_relations,
    verify_greatest,
)
from .problem import (
    Problem,
    ProblemError,
    dumps,
    factor_to_json,
    load_problem,
    report_to_json,
)
from .relation import NotAPreorderError, Universe, UniverseMismatchError
from .solver import (
    DEFAULT_MAX_ITERATIONS,
    SolveReport,
    SolverConfig,
    solve_equivalence,
    solve_greatest,
    solve_preorder,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


class InputError(Exception):
    pass


def _kind(text: str) -> SystemKind:
    try:
        return SystemKind.parse(text)
    except (KeyError, ValueError):
        raise argparse.ArgumentTypeError(f"invalid kind {text!r}; use wls1, wls2 or wls3") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _degree(problem: Problem, text: str):
    try:
        return problem.lattice.coerce(text)
    except LatticeError as exc:
        raise InputError(f"invalid degree {text!r}: {exc}") from exc


def _bound(problem: Problem, ref: str | None):
    ref = ref or problem.x0 or "universal"
    try:
        return problem.relation(ref)
    except ProblemError as exc:
        raise InputError(str(exc)) from exc


def _run_solver(args, solver: Callable[..., SolveReport]) -> int:
    problem = load_problem(args.input)
    config = SolverConfig(
        degree=_degree(problem, args.degree),
        x0=_bound(problem, args.x0),
        kind=args.kind,
        max_iterations=args.max_iter,
        trace=args.trace,
    )
    report = solver(problem.family, config)
    _emit(dumps(report_to_json(report)), args.output)
    return EXIT_OK if report.converged else EXIT_CAP


def cmd_solve(args) -> int:
    return _run_solver(args, solve_greatest)


def cmd_solve_preorder(args) -> int:
    return _run_solver(args, solve_preorder)


def cmd_solve_equivalence(args) -> int:
    return _run_solver(args, solve_equivalence)


def cmd_degree(args) -> int:
    problem = load_problem(args.input)
    try:
        X = problem.relation(args.relation)
    except ProblemError as exc:
        raise InputError(str(exc)) from exc
    print(problem.lattice.format(sd(args.kind, problem.family, X)))
    return EXIT_OK


def cmd_aggregate(args) -> int:
    problem = load_problem(args.input)
    network = FuzzyNetwork(problem.family)
    fn, report = aggregate(
        network, _degree(problem, args.degree), args.kind, args.method, args.max_iter
    )
    out = {"report": report_to_json(report), "factor": factor_to_json(fn) if fn else None}
    _emit(dumps(out), args.output)
    return EXIT_OK if fn is not None else EXIT_CAP


def cmd_oracle_verify(args) -> int:
    if args.lattice == "boolean":
        L = FiniteLattice.boolean()
    else:
        L = FiniteLattice.chain(args.levels, args.lattice)
    U = Universe.of_size(args.nodes)
    spec = EnumerationSpec(L, U, budget=args.budget)
    relations = list(enumerate_relations(spec))
    families = [[R] for R in relations]
    if args.families is not None and args.families < len(families):
        families = random.Random(args.seed).sample(families, args.families)
    report = verify_greatest(L, U, families)
    agreement_violations = 0
    for family in families:
        agreement_violations += len(check_cut_agreement(spec, family).violations)
    ok = report.ok and not agreement_violations
    print(
        f"lattice={L.name} nodes={args.nodes} families={len(families)} "
        f"instances={report.instances} mismatches={len(report.mismatches)} "
        f"join_failures={report.join_failures} agreement_violations={agreement_violations} "
        f"{'PASS' if ok else 'FAIL'}"
    )
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlsolve",
        description="Degree-bounded solvers for weakly linear fuzzy relation systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_args(p):
        p.add_argument("--input", required=True, help="problem JSON file")
        p.add_argument("--kind", type=_kind, default=SystemKind.WLS3, help="wls1, wls2 or wls3 (default wls3)")
        p.add_argument("--degree", required=True, help="solution degree, e.g. 4/5 or an element name")
        p.add_argument("--x0", default=None, help="upper bound: identity, universal or a relation name (default: the file's x0, else universal)")
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITERATIONS, help="iteration cap (default %(default)s)")
        p.add_argument("--trace", action="store_true", help="include every iterate in the report")
        p.add_argument("--output", default=None, help="write the JSON report here instead of stdout")

    p = sub.add_parser("solve", help="greatest relation solving the system to the given degree")
    solver_args(p)
    p.set_defaults(func=cmd_solve)
    p = sub.add_parser("solve-preorder", help="a fuzzy preorder solving the system to the given degree")
    solver_args(p)
    p.set_defaults(func=cmd_solve_preorder)
    p = sub.add_parser("solve-equivalence", help="a fuzzy equivalence solving the system to the given degree")
    solver_args(p)
    p.set_defaults(func=cmd_solve_equivalence)

    p = sub.add_parser("degree", help="print the solution degree of a relation")
    p.add_argument("--input", required=True, help="problem JSON file")
    p.add_argument("--relation", required=True, help="identity, universal or a relation name")
    p.add_argument("--kind", type=int, choices=range(1, 10), default=3, help="solution degree variant 1..9 (default 3)")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("aggregate", help="factor the network by an approximate regular preorder")
    p.add_argument("--input", required=True, help="problem JSON file")
    p.add_argument("--degree", required=True, help="solution degree")
    p.add_argument("--kind", type=_kind, default=SystemKind.WLS3, help="wls1, wls2 or wls3 (default wls3)")
    p.add_argument("--method", choices=["preorder", "equivalence"], default="preorder")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITERATIONS, help="iteration cap (default %(default)s)")
    p.add_argument("--output", default=None, help="write the JSON here instead of stdout")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("oracle-verify", help="compare the solver with brute-force enumeration")
    p.add_argument("--lattice", choices=["godel", "lukasiewicz", "boolean"], default="godel", help="chain product (default godel)")
    p.add_argument("--levels", type=int, default=3, help="chain length (default 3; at most 4)")
    p.add_argument("--nodes", type=int, default=2, help="universe size (default 2)")
    p.add_argument("--families", type=int, default=None, help="check a random sample of this many single-relation families (default: all)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--budget", type=int, default=10**6, help="enumeration budget")
    p.set_defaults(func=cmd_oracle_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_iter", 1) < 1:
        parser.error("--max-iter must be at least 1")
    if args.command == "oracle-verify" and not 2 <= args.levels <= 4:
        parser.error("--levels must be between 2 and 4")
    try:
        return args.func(args)
    except (ProblemError, InputError, NotAPreorderError, UniverseMismatchError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
