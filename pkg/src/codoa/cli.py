"""Command-line front end: single runs, the full benchmark grid, and listing.

Exit codes: 0 on success, 1 on configuration, usage, or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Optional, Sequence

from codoa.benchmarks import REGISTRY
from codoa.engine import AlgorithmParams, ConfigurationError
from codoa.harness import ExperimentConfig, run_experiment, table2_grid, write_report


class UsageError(Exception):
    """Bad command line; reported on stderr with exit code 1."""


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract here is 1.
    def error(self, message: str) -> None:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="codoa",
        description="CoDOA swarm minimizer: run benchmarks and reproduce the "
        "reference result grid.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    run_p = sub.add_parser("run", help="optimize one benchmark function")
    run_p.add_argument("--function", required=True, help="benchmark function name")
    run_p.add_argument("--dims", type=int, default=2, help="problem dimension (default 2)")
    run_p.add_argument("--particles", type=int, default=50, help="swarm size (default 50)")
    run_p.add_argument(
        "--iterations", type=int, default=5000, help="iteration budget (default 5000)"
    )
    run_p.add_argument(
        "--ir0", type=float, default=0.5, help="initial interactivity rate (default 0.5)"
    )
    run_p.add_argument(
        "--max-ir", type=float, default=10.0, help="interactivity upper bound (default 10.0)"
    )
    run_p.add_argument("--ml", type=int, default=3, help="maturity limit (default 3)")
    run_p.add_argument(
        "--rationality", type=int, default=2, help="rationality rate (default 2)"
    )
    _add_experiment_flags(run_p)
    run_p.set_defaults(handler=cmd_run)

    table_p = sub.add_parser(
        "table2", help="run the full reference grid (15 entries) and write a report"
    )
    _add_experiment_flags(table_p)
    table_p.set_defaults(handler=cmd_table2)

    list_p = sub.add_parser("list", help="list benchmark functions with domains and minima")
    list_p.set_defaults(handler=cmd_list)

    return parser


def _add_experiment_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--runs", type=int, default=10, help="runs per entry (default 10)")
    sub.add_argument("--seed", type=int, default=1, help="base seed; run k uses seed+k (default 1)")
    sub.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="report format (default csv)"
    )
    sub.add_argument("--out", default=None, metavar="PATH", help="report destination (default stdout)")


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse a command line; raises UsageError on malformed input."""
    return build_parser().parse_args(argv)


def _params_line(params: AlgorithmParams) -> str:
    return (
        f"params: N={params.num_particles} iterations={params.max_iterations} "
        f"ir0={params.initial_ir:g} max_ir={params.max_ir:g} min_ir={params.min_ir:g} "
        f"ir_floor={params.ir_floor:g} ml={params.maturity_limit} "
        f"r={params.rationality_rate} initial_ex={params.initial_ex}"
    )


def cmd_run(ns: argparse.Namespace) -> int:
    """Run one (function, dimension) entry and report its statistics."""
    params = AlgorithmParams(
        num_particles=ns.particles,
        max_iterations=ns.iterations,
        initial_ir=ns.ir0,
        max_ir=ns.max_ir,
        maturity_limit=ns.ml,
        rationality_rate=ns.rationality,
    )
    config = ExperimentConfig(
        entries=((ns.function, ns.dims),),
        runs_per_entry=ns.runs,
        base_seed=ns.seed,
        params=params,
        output_format=ns.format,
        output_path=ns.out,
    )
    report = run_experiment(config)
    if ns.out is not None:
        write_report(report, ns.format, ns.out)
        return 0
    entry = report.entries[0]
    s = entry.stats
    print(f"function={entry.function} dimension={entry.dimension} "
          f"runs={report.runs_per_entry} base_seed={report.base_seed}")
    print(_params_line(report.params))
    print(f"best={s.best:.9g} worst={s.worst:.9g} mean={s.mean:.9g} "
          f"median={s.median:.9g} stddev={s.stddev:.9g}")
    if entry.known_minimum is not None:
        print(f"known_minimum={entry.known_minimum:.9g} abs_error={entry.abs_error:.9g}")
    return 0


def cmd_table2(ns: argparse.Namespace) -> int:
    """Run the full reference grid and write the report."""
    config = replace(
        table2_grid(),
        runs_per_entry=ns.runs,
        base_seed=ns.seed,
        output_format=ns.format,
        output_path=ns.out,
    )
    report = run_experiment(config)
    write_report(report, config.output_format, config.output_path)
    return 0


def cmd_list(ns: argparse.Namespace) -> int:
    """Print one line per benchmark function: name, domain, known minimum."""
    for spec in REGISTRY.values():
        print(
            f"{spec.name:<18} {spec.domain_label():<32} "
            f"min {spec.known_minimum_value:g} at {spec.minimizer_label()}"
        )
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        ns = parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return ns.handler(ns)
    except (ConfigurationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
