"""Seeded multi-run experiments with cross-run statistics and report emission.

Runs are reproducible: run ``k`` of every entry uses ``base_seed + k``, so
per-entry results are independent of entry order and of the execution
schedule.  Reports carry best/worst/mean/median plus the sample standard
deviation (n - 1 denominator).
"""

from __future__ import annotations

import csv
import json
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Optional

from codoa.benchmarks import make_problem
from codoa.engine import AlgorithmParams, ConfigurationError, RunResult, run

REPORT_COLUMNS = (
    "function",
    "dimension",
    "runs",
    "best",
    "worst",
    "mean",
    "median",
    "stddev",
    "known_minimum",
    "abs_error",
    "base_seed",
)

TABLE2_DIMENSIONS = (2, 5, 10, 20, 30)


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: which (function, dimension) entries to run, and how."""

    entries: tuple[tuple[str, int], ...]
    runs_per_entry: int = 10
    base_seed: int = 1
    params: AlgorithmParams = AlgorithmParams()
    output_format: str = "csv"
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        try:
            entries = tuple((str(name), int(dim)) for name, dim in self.entries)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(
                f"each entry must be a (function, dimension) pair: {exc}"
            ) from None
        object.__setattr__(self, "entries", entries)
        for name, dim in entries:
            make_problem(name, dim)  # raises ConfigurationError on a bad entry
        if self.runs_per_entry < 1:
            raise ConfigurationError(
                f"runs_per_entry must be positive, got {self.runs_per_entry}"
            )
        if self.output_format not in ("csv", "json"):
            raise ConfigurationError(
                f"output_format must be 'csv' or 'json', got {self.output_format!r}"
            )


@dataclass(frozen=True)
class RunStatistics:
    """Cross-run summary for one entry, plus the raw per-run values."""

    best: float
    worst: float
    mean: float
    median: float
    stddev: float
    run_bests: tuple[float, ...]
    seeds: tuple[int, ...]

    @classmethod
    def from_runs(cls, bests, seeds) -> "RunStatistics":
        bests = tuple(float(b) for b in bests)
        stddev = statistics.stdev(bests) if len(bests) > 1 else 0.0
        return cls(
            best=min(bests),
            worst=max(bests),
            mean=statistics.fmean(bests),
            median=statistics.median(bests),
            stddev=stddev,
            run_bests=bests,
            seeds=tuple(int(s) for s in seeds),
        )


@dataclass(frozen=True)
class EntryReport:
    """Statistics for one (function, dimension) entry."""

    function: str
    dimension: int
    stats: RunStatistics
    known_minimum: Optional[float]
    abs_error: Optional[float]


@dataclass(frozen=True)
class ExperimentReport:
    """Per-entry statistics plus the settings that produced them."""

    entries: tuple[EntryReport, ...]
    params: AlgorithmParams
    runs_per_entry: int
    base_seed: int


def _run_job(job: tuple[str, int, AlgorithmParams, int]) -> RunResult:
    name, dimension, params, seed = job
    return run(params, make_problem(name, dimension), seed)


def run_experiment(config: ExperimentConfig, workers: Optional[int] = None) -> ExperimentReport:
    """Execute every entry of the experiment and collect statistics.

    ``workers`` > 1 runs the independent (entry, run) jobs in a process
    pool; results are collected in (entry index, run index) order, so the
    report is identical to a serial execution.
    """
    seeds = [config.base_seed + k for k in range(config.runs_per_entry)]
    jobs = [
        (name, dim, config.params, seed)
        for name, dim in config.entries
        for seed in seeds
    ]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = [_run_job(job) for job in jobs]

    entry_reports = []
    n = config.runs_per_entry
    for idx, (name, dim) in enumerate(config.entries):
        bests = [r.best_fitness for r in results[idx * n : (idx + 1) * n]]
        stats = RunStatistics.from_runs(bests, seeds)
        known = make_problem(name, dim).known_minimum_value
        abs_error = None if known is None else abs(stats.best - known)
        entry_reports.append(EntryReport(name, dim, stats, known, abs_error))
    return ExperimentReport(
        entries=tuple(entry_reports),
        params=config.params,
        runs_per_entry=config.runs_per_entry,
        base_seed=config.base_seed,
    )


def table2_grid() -> ExperimentConfig:
    """The full reference benchmark grid at the reference settings.

    Five two-dimensional functions at dimension 2, plus sphere and
    rosenbrock at dimensions 2, 5, 10, 20, and 30: fifteen entries, ten
    seeded runs each.
    """
    entries = [
        (name, 2)
        for name in ("booth", "beale", "goldstein_price", "mccormick", "three_hump_camel")
    ]
    entries += [("sphere", d) for d in TABLE2_DIMENSIONS]
    entries += [("rosenbrock", d) for d in TABLE2_DIMENSIONS]
    return ExperimentConfig(entries=tuple(entries))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def _entry_row(report: ExperimentReport, entry: EntryReport) -> dict:
    return {
        "function": entry.function,
        "dimension": entry.dimension,
        "runs": report.runs_per_entry,
        "best": entry.stats.best,
        "worst": entry.stats.worst,
        "mean": entry.stats.mean,
        "median": entry.stats.median,
        "stddev": entry.stats.stddev,
        "known_minimum": entry.known_minimum,
        "abs_error": entry.abs_error,
        "base_seed": report.base_seed,
    }


def report_to_dict(report: ExperimentReport) -> dict:
    """JSON-ready view of a report; floats are kept exact for round-trips."""
    entries = []
    for entry in report.entries:
        row = _entry_row(report, entry)
        row["run_bests"] = list(entry.stats.run_bests)
        row["seeds"] = list(entry.stats.seeds)
        entries.append(row)
    return {
        "params": asdict(report.params),
        "runs_per_entry": report.runs_per_entry,
        "base_seed": report.base_seed,
        "entries": entries,
    }


def write_report(report: ExperimentReport, output_format: str, destination=None) -> None:
    """Write the report as CSV or JSON to a path, or to stdout if none given."""
    if output_format not in ("csv", "json"):
        raise ConfigurationError(
            f"output_format must be 'csv' or 'json', got {output_format!r}"
        )
    if destination is None:
        _emit(report, output_format, sys.stdout)
    else:
        with open(destination, "w", newline="") as fh:
            _emit(report, output_format, fh)


def _emit(report: ExperimentReport, output_format: str, fh) -> None:
    if output_format == "json":
        json.dump(report_to_dict(report), fh, indent=2)
        fh.write("\n")
        return
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for entry in report.entries:
        row = _entry_row(report, entry)
        writer.writerow([_cell(row[col]) for col in REPORT_COLUMNS])


_PARAM_KEYS = tuple(f.name for f in fields(AlgorithmParams))
_TOP_KEYS = ("entries", "runs_per_entry", "base_seed", "output_format", "output_path")


def load_config(path) -> ExperimentConfig:
    """Load an experiment configuration from a flat JSON document.

    Recognized keys are the experiment fields (``entries``,
    ``runs_per_entry``, ``base_seed``, ``output_format``, ``output_path``)
    plus the algorithm parameter names inlined at top level.  Unknown keys
    are an error.
    """
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ConfigurationError("experiment config must be a JSON object")
    unknown = sorted(set(doc) - set(_TOP_KEYS) - set(_PARAM_KEYS))
    if unknown:
        raise ConfigurationError(f"unknown config keys: {', '.join(unknown)}")
    if "entries" not in doc:
        raise ConfigurationError("experiment config is missing 'entries'")
    params = AlgorithmParams(**{k: doc[k] for k in _PARAM_KEYS if k in doc})
    return ExperimentConfig(
        entries=doc["entries"],
        runs_per_entry=doc.get("runs_per_entry", 10),
        base_seed=doc.get("base_seed", 1),
        params=params,
        output_format=doc.get("output_format", "csv"),
        output_path=doc.get("output_path"),
    )
