"""CoDOA: Cognitive Development Optimization Algorithm.

A swarm-based single-objective continuous minimizer, the classic benchmark
suite it was evaluated on, and a seeded experiment harness.
"""

from codoa.benchmarks import REGISTRY, BenchmarkSpec, make_problem
from codoa.engine import (
    AlgorithmParams,
    ConfigurationError,
    ObjectiveProblem,
    Particle,
    RunResult,
    SwarmState,
    initialize,
    iterate,
    maximization_problem,
    run,
)
from codoa.harness import (
    EntryReport,
    ExperimentConfig,
    ExperimentReport,
    RunStatistics,
    load_config,
    run_experiment,
    table2_grid,
    write_report,
)
from codoa.rng import RandomStream

__version__ = "0.1.0"

__all__ = [
    "AlgorithmParams",
    "BenchmarkSpec",
    "ConfigurationError",
    "EntryReport",
    "ExperimentConfig",
    "ExperimentReport",
    "ObjectiveProblem",
    "Particle",
    "REGISTRY",
    "RandomStream",
    "RunResult",
    "RunStatistics",
    "SwarmState",
    "initialize",
    "iterate",
    "load_config",
    "make_problem",
    "maximization_problem",
    "run",
    "run_experiment",
    "table2_grid",
    "write_report",
]
