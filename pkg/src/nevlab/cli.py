"""Command-line interface.

Subcommands: lemmas, filtration, bound, zeros, nevanlinna, smt,
theorem-r.  Shared flags (--out, --tol, --threads, --seed) attach to
every subcommand.  Exit codes: 0 on success, 2 on precondition failures
(bad input, parse errors, general-position violations), 3 on numerical
non-convergence.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import replace

from .errors import ConvergenceError, NevlabError, PreconditionError
from .expressions import Curve
from .filtration import (filtration_levels, truncation_report,
                         weighted_quotient_sum)
from .harness import (SuiteLimits, lemma_suite, run_smt_scenario,
                      theorem_r_check)
from .nevanlinna import nevanlinna_rows
from .parsing import parse_expr, parse_form
from .polynomials import HomogeneousPoly
from .reporting import emit, fmt_value
from .scenario import load_scenario
from .zeros import locate_zeros


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", choices=("csv", "json"), default="csv",
                        help="report format (default csv)")
    parser.add_argument("--tol", type=float, default=None,
                        help="quadrature tolerance override")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for per-radius rows")
    parser.add_argument("--seed", type=int, default=20250809,
                        help="seed for randomized suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nevlab",
        description="Desk-scale checks for curves meeting hypersurfaces: exact "
                    "graded filtrations, truncation levels, and Nevanlinna "
                    "functionals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemmas", help="run the exact-property regression suite")
    p.add_argument("--systems", type=int, default=20)
    p.add_argument("--random-max-dim", type=int, default=3)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--max-alpha", type=int, default=8)
    p.add_argument("--zero-polys", type=int, default=20)
    p.add_argument("--fmt-checks", type=int, default=2)
    _common_flags(p)

    p = sub.add_parser("filtration", help="level dimensions and quotients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--gammas", type=str, default=None,
                   help="file with one form per line (default: x_j^d)")
    _common_flags(p)

    p = sub.add_parser("bound", help="truncation-level arithmetic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--epsilon", type=str, required=True)
    _common_flags(p)

    p = sub.add_parser("zeros", help="locate zeros of an expression in a disk")
    p.add_argument("--expr", type=str, required=True)
    p.add_argument("--radius", type=float, required=True)
    _common_flags(p)

    p = sub.add_parser("nevanlinna", help="functional table for a scenario")
    p.add_argument("--scenario", type=str, required=True)
    _common_flags(p)

    p = sub.add_parser("smt", help="truncated-inequality margins for a scenario")
    p.add_argument("--scenario", type=str, required=True)
    _common_flags(p)

    p = sub.add_parser("theorem-r", help="hyperplane-bound check for a scenario")
    p.add_argument("--scenario", type=str, required=True)
    _common_flags(p)

    return parser


def _cmd_lemmas(args) -> str:
    limits = SuiteLimits(
        random_systems=args.systems,
        random_max_dim=args.random_max_dim,
        random_max_degree=args.max_degree,
        filtration_max_dim=args.max_dim,
        filtration_max_degree=args.max_degree,
        filtration_max_alpha=args.max_alpha,
        zero_polynomials=args.zero_polys,
        fmt_checks=args.fmt_checks,
        seed=args.seed)
    results = lemma_suite(limits)
    rows = [{"name": r.name, "passed": r.passed, "detail": r.detail,
             "seconds": r.seconds} for r in results]
    meta = {"blocks": len(rows), "all_passed": all(r.passed for r in results)}
    return emit(args.out, meta, ["name", "passed", "detail", "seconds"], rows)


def _load_gammas(args) -> list[HomogeneousPoly]:
    if args.gammas:
        with open(args.gammas) as handle:
            lines = [line.strip() for line in handle if line.strip()]
        return [parse_form(line, args.n + 1) for line in lines]
    return [HomogeneousPoly.monomial(
        tuple(args.d if i == j else 0 for i in range(args.n + 1)))
        for j in range(1, args.n + 1)]


def _cmd_filtration(args) -> str:
    gammas = _load_gammas(args)
    filt = filtration_levels(gammas, args.alpha)
    if filt.degree != args.d:
        raise PreconditionError(
            f"forms have degree {filt.degree}, but --d is {args.d}")
    delta = weighted_quotient_sum(gammas, args.alpha)
    rows = [{"index": ";".join(map(str, lv.index)), "weight": sum(lv.index),
             "dim": lv.dim, "delta": lv.delta} for lv in filt.levels]
    meta = {"n": filt.n, "d": filt.degree, "alpha": filt.alpha,
            "total_dim": filt.total_dim, "weighted_delta_sum": delta}
    return emit(args.out, meta, ["index", "weight", "dim", "delta"], rows)


def _cmd_bound(args) -> str:
    report = truncation_report(args.n, args.d, args.epsilon)
    row = {"n": report.n, "d": report.d, "epsilon": str(report.epsilon),
           "alpha": report.alpha, "m_exact": report.m_exact,
           "m_closed_form": report.m_closed_form,
           "delta_lower": str(report.delta_lower),
           "closed_form_exceeded": report.closed_form_exceeded}
    return emit(args.out, {"command": "bound"}, list(row), [row])


def _cmd_zeros(args) -> str:
    expr = parse_expr(args.expr)
    records = locate_zeros(expr, args.radius,
                           args.tol if args.tol is not None else 1e-9)
    rows = [{"re": rec.location.real, "im": rec.location.imag,
             "multiplicity": rec.multiplicity,
             "certified_radius": rec.certified_radius} for rec in records]
    meta = {"expr": args.expr, "radius": args.radius,
            "total_multiplicity": sum(r.multiplicity for r in records)}
    return emit(args.out, meta, ["re", "im", "multiplicity", "certified_radius"], rows)


def _cmd_nevanlinna(args) -> str:
    scenario = load_scenario(args.scenario)
    tol = args.tol if args.tol is not None else scenario.tol
    truncation = scenario.m_override
    rows_data = nevanlinna_rows(scenario.parsed_curve(), scenario.parsed_targets(),
                                scenario.r_grid, truncation, tol)
    columns = ["r", "T"]
    q = len(scenario.targets)
    for j in range(q):
        columns += [f"m_{j}", f"n_{j}", f"nM_{j}", f"N_{j}", f"NM_{j}"]
    rows = []
    for row in rows_data:
        record = {"r": row.r, "T": row.characteristic}
        for j in range(q):
            record[f"m_{j}"] = row.proximity[j]
            record[f"n_{j}"] = row.count[j]
            record[f"nM_{j}"] = row.count_truncated[j]
            record[f"N_{j}"] = row.counting[j]
            record[f"NM_{j}"] = row.counting_truncated[j]
        rows.append(record)
    meta = {"scenario": args.scenario, "q": q,
            "truncation": "inf" if truncation in (None, math.inf) else truncation}
    return emit(args.out, meta, columns, rows)


def _cmd_smt(args) -> str:
    scenario = load_scenario(args.scenario)
    if args.tol is not None:
        scenario = replace(scenario, tol=args.tol)
    report = run_smt_scenario(scenario, threads=args.threads)
    q = report.q
    columns = ["r", "T"] + [f"NM_{j}" for j in range(q)] + \
        ["rhs", "lhs", "margin", "flagged"]
    rows = []
    for row in report.rows:
        record = {"r": row.r, "T": row.characteristic, "rhs": row.rhs,
                  "lhs": row.lhs, "margin": row.margin, "flagged": row.flagged}
        for j in range(q):
            record[f"NM_{j}"] = row.counting_truncated[j]
        rows.append(record)
    meta = {
        "n": report.n, "q": q, "lcm_degree": report.lcm_degree,
        "epsilon": report.epsilon, "alpha": report.alpha,
        "alpha_overridden": report.alpha_overridden,
        "m_exact": report.m_exact, "m_closed_form": report.m_closed_form,
        "truncation": ("inf" if report.truncation == math.inf
                       else int(report.truncation)),
        "truncation_overridden": report.truncation_overridden,
        "closed_form_exceeded": report.closed_form_exceeded,
        "nondegeneracy": report.nondegeneracy,
    }
    return emit(args.out, meta, columns, rows)


def _cmd_theorem_r(args) -> str:
    scenario = load_scenario(args.scenario)
    tol = args.tol if args.tol is not None else scenario.tol
    curve = Curve(scenario.n, tuple(parse_expr(c) for c in scenario.curve))
    forms = scenario.parsed_targets()
    report = theorem_r_check(curve, forms, scenario.r_grid, tol,
                             threads=args.threads)
    rows = [{"r": row.r, "lhs": row.lhs, "rhs": row.rhs, "gap": row.gap}
            for row in report.rows]
    meta = {"m": report.m, "q": report.q, "independent_subsets": report.subsets,
            "wronskian_zeros": report.wronskian_zeros}
    return emit(args.out, meta, ["r", "lhs", "rhs", "gap"], rows)


_COMMANDS = {
    "lemmas": _cmd_lemmas,
    "filtration": _cmd_filtration,
    "bound": _cmd_bound,
    "zeros": _cmd_zeros,
    "nevanlinna": _cmd_nevanlinna,
    "smt": _cmd_smt,
    "theorem-r": _cmd_theorem_r,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sys.stdout.write(_COMMANDS[args.command](args))
        return 0
    except ConvergenceError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except (PreconditionError, NevlabError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
