"""Command-line interface.

Subcommands: ``solve``, ``maxr``, ``sample``, ``table`` and ``validate``.
Exit codes: 0 ok, 1 usage, 2 infeasible, 3 rejection budget exhausted,
4 validation failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .efficiency import PAPER_C1_VALUES, PAPER_C2_VALUES, efficiency_grid, johnk_efficiency
from .errors import CorrBetaError, Infeasible, TooManyRejections
from .params import (
    CorrelatedBetaTarget,
    check_feasibility,
    max_feasible_r,
    solve_alphas,
    target_correlation,
)
from .rng import RngStream
from .samplers import DEFAULT_MAX_ATTEMPTS, sample_correlated_beta
from .validation import validate_sampler

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_REJECTIONS = 3
EXIT_VALIDATION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("must be an unsigned 64-bit integer")
    return value


def _float_list(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _count(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corrbeta", description="Positively correlated beta pairs via a Dirichlet.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def target_args(p, with_r=True):
        p.add_argument("--c1", type=float, required=True)
        p.add_argument("--c2", type=float, required=True)
        p.add_argument("--c3", type=float, required=True)
        if with_r:
            p.add_argument("--r", type=float, required=True)

    def output_args(p, formats, default="text"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("-o", "--output", help="write to this path instead of stdout")

    def sampling_args(p):
        p.add_argument("-n", type=_count, required=True)
        p.add_argument("--method", choices=("gamma", "johnk"), default="gamma")
        p.add_argument("--seed", type=_u64, default=0)
        p.add_argument("--stream", type=_u64, default=0)
        p.add_argument("--max-attempts", type=_count, default=DEFAULT_MAX_ATTEMPTS)

    p = sub.add_parser("solve", help="solve for the Dirichlet shapes")
    target_args(p)
    output_args(p, ("text", "json"))

    p = sub.add_parser("maxr", help="largest feasible correlation for given marginals")
    target_args(p, with_r=False)
    output_args(p, ("text", "json"))

    p = sub.add_parser("sample", help="draw correlated beta pairs")
    target_args(p)
    sampling_args(p)
    output_args(p, ("csv", "json"), default="csv")
    p.add_argument("--diagnostics", help="JSON sidecar for Johnk statistics (default: stderr)")

    p = sub.add_parser("table", help="Johnk efficiency table for c1 = c3")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--c1-list", type=_float_list, default=list(PAPER_C1_VALUES))
    p.add_argument("--c2-list", type=_float_list, default=list(PAPER_C2_VALUES))
    output_args(p, ("text", "csv", "json"))

    p = sub.add_parser("validate", help="sample and check marginals and correlation")
    target_args(p)
    sampling_args(p)
    output_args(p, ("json", "text"), default="json")
    return parser


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        # newline="" keeps "\n" line endings on every platform
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _target(args) -> CorrelatedBetaTarget:
    return CorrelatedBetaTarget(args.c1, args.c2, args.c3, args.r)


def _infeasible(report, c1, c2, c3, fmt) -> int:
    try:
        rmax = max_feasible_r(c1, c2, c3)
    except CorrBetaError:
        rmax = None
    if fmt == "json":
        print(json.dumps({**report.to_dict(), "max_feasible_r": rmax}, indent=2))
    else:
        print("infeasible: " + ", ".join(report.violated))
        print(f"special case: {report.special_case.value}")
        names = ("alpha1", "alpha2", "alpha0", "alpha3")
        print("margins: " + ", ".join(f"{k}={v:.6g}" for k, v in zip(names, report.margins)))
        print("max feasible r: " + ("undefined (c1 + c2 <= c3)" if rmax is None else f"{rmax:.10g}"))
    return EXIT_INFEASIBLE


def cmd_solve(args) -> int:
    target = _target(args)
    report = check_feasibility(target)
    if not report.feasible:
        return _infeasible(report, args.c1, args.c2, args.c3, args.format)
    alphas = solve_alphas(target)
    rho = target_correlation(alphas)
    if args.format == "json":
        out = {
            "alphas": {"a0": alphas.a0, "a1": alphas.a1, "a2": alphas.a2, "a3": alphas.a3},
            "gamma": alphas.gamma_sum,
            "c4": target.c4,
            "round_trip_correlation": rho,
            "johnk_efficiency": johnk_efficiency(alphas),
            "feasibility": report.to_dict(),
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"a0 = {alphas.a0:.12g}")
        print(f"a1 = {alphas.a1:.12g}")
        print(f"a2 = {alphas.a2:.12g}")
        print(f"a3 = {alphas.a3:.12g}")
        print(f"gamma = {alphas.gamma_sum:.12g}")
        print(f"special case: {report.special_case.value}")
        print(f"round-trip correlation: {rho:.12g}")
        print(f"johnk efficiency: {johnk_efficiency(alphas):.6g}")
    return EXIT_OK


def cmd_maxr(args) -> int:
    rmax = max_feasible_r(args.c1, args.c2, args.c3)
    if args.format == "json":
        print(json.dumps({"c1": args.c1, "c2": args.c2, "c3": args.c3, "max_feasible_r": rmax}))
    else:
        print(f"{rmax:.10g}")
    return EXIT_OK


def cmd_sample(args) -> int:
    target = _target(args)
    stream = RngStream(args.seed, args.stream)
    batch = sample_correlated_beta(stream, target, args.n, args.method, args.max_attempts)
    with _sink(args.output) as fh:
        if args.format == "json":
            json.dump({"y1": batch.y1.tolist(), "y2": batch.y2.tolist()}, fh)
            fh.write("\n")
        else:
            fh.write("y1,y2\n")
            fh.writelines(f"{a!r},{b!r}\n" for a, b in zip(batch.y1.tolist(), batch.y2.tolist()))
    if batch.stats is not None:
        diag = {
            "attempts": batch.stats.attempts,
            "accepts": batch.stats.accepts,
            "empirical_rate": batch.stats.rate,
            "analytic_efficiency": johnk_efficiency(batch.alphas),
        }
        if args.diagnostics:
            with open(args.diagnostics, "w", encoding="utf-8") as fh:
                json.dump(diag, fh, indent=2)
                fh.write("\n")
        else:
            print(json.dumps(diag), file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    grid = efficiency_grid(args.r, args.c1_list, args.c2_list)
    with _sink(args.output) as fh:
        if args.format == "csv":
            fh.write(grid.to_csv())
        elif args.format == "json":
            fh.write(json.dumps(grid.to_dict(), indent=2) + "\n")
        else:
            fh.write(grid.to_text())
    return EXIT_OK


def cmd_validate(args) -> int:
    target = _target(args)
    stream = RngStream(args.seed, args.stream)
    report = validate_sampler(stream, target, args.n, args.method, args.max_attempts)
    with _sink(args.output) as fh:
        if args.format == "json":
            fh.write(report.to_json(indent=2) + "\n")
        else:
            for key, value in report.to_dict().items():
                fh.write(f"{key}: {value}\n")
    return EXIT_OK if report.passed else EXIT_VALIDATION


COMMANDS = {
    "solve": cmd_solve,
    "maxr": cmd_maxr,
    "sample": cmd_sample,
    "table": cmd_table,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.subcommand](args)
    except Infeasible as exc:
        report = exc.report
        return _infeasible(report, args.c1, args.c2, args.c3, "text")
    except TooManyRejections as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTIONS
    except CorrBetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
