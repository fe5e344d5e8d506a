"""Benchmark objectives with their search domains and known minima.

Seven classic single-objective test functions: five fixed two-dimensional
surfaces plus the dimension-polymorphic sphere and rosenbrock.  The raw
functions are pure math and evaluate anywhere; box-domain enforcement is
the engine's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from codoa.engine import ConfigurationError, ObjectiveProblem


def booth(x: float, y: float) -> float:
    """Quadratic plate-shaped valley; minimum 0 at (1, 3)."""
    return (x + 2.0 * y - 7.0) ** 2 + (2.0 * x + y - 5.0) ** 2


def beale(x: float, y: float) -> float:
    """Sharp multimodal surface; minimum 0 at (3, 0.5)."""
    return (
        (1.5 - x + x * y) ** 2
        + (2.25 - x + x * y * y) ** 2
        + (2.625 - x + x * y**3) ** 2
    )


def goldstein_price(x: float, y: float) -> float:
    """Product of two quartic factors; minimum 3 at (0, -1)."""
    a = 1.0 + (x + y + 1.0) ** 2 * (
        19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y
    )
    b = 30.0 + (2.0 * x - 3.0 * y) ** 2 * (
        18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y
    )
    return a * b


def mccormick(x: float, y: float) -> float:
    """Sinusoidal valley; minimum -1.9133 at (-0.54719, -1.54719)."""
    return math.sin(x + y) + (x - y) ** 2 - 1.5 * x + 2.5 * y + 1.0


def three_hump_camel(x: float, y: float) -> float:
    """Three local minima; global minimum 0 at the origin."""
    return 2.0 * x * x - 1.05 * x**4 + x**6 / 6.0 + x * y + y * y


def sphere(x) -> float:
    """Sum of squares; minimum 0 at the origin, any dimension >= 1."""
    x = np.asarray(x, dtype=float)
    if x.size < 1:
        raise ValueError("sphere needs at least one coordinate")
    return float(np.square(x).sum())


def rosenbrock(x) -> float:
    """Banana-shaped valley; minimum 0 at all-ones, any dimension >= 2."""
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        raise ValueError("rosenbrock needs at least two coordinates")
    return float((100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2).sum())


def _pair(f: Callable[[float, float], float]) -> Callable[[np.ndarray], float]:
    def evaluator(pos: np.ndarray) -> float:
        return float(f(float(pos[0]), float(pos[1])))

    return evaluator


@dataclass(frozen=True)
class BenchmarkSpec:
    """Domain card for one objective: bounds, optimum, and dimension rule.

    ``fixed_dimension`` is None for dimension-polymorphic functions (any
    n >= 2).  ``bounds`` and ``minimizer`` hold one entry per coordinate;
    a single entry is replicated across all requested dimensions.
    """

    name: str
    fixed_dimension: Optional[int]
    bounds: tuple[tuple[float, float], ...]
    known_minimum_value: float
    minimizer: tuple[float, ...]
    func: Callable[[np.ndarray], float]

    def domain_label(self) -> str:
        """Human-readable search domain, e.g. ``x,y in [-10, 10]``."""
        if len(self.bounds) == 1:
            lo, hi = self.bounds[0]
            if self.fixed_dimension is None:
                return f"each x_i in [{lo:g}, {hi:g}], n >= 2"
            return f"x,y in [{lo:g}, {hi:g}]"
        parts = [
            f"{var} in [{lo:g}, {hi:g}]"
            for var, (lo, hi) in zip("xyzw", self.bounds)
        ]
        return ", ".join(parts)

    def minimizer_label(self) -> str:
        if self.fixed_dimension is None:
            return "(" + ", ".join(f"{v:g}" for v in self.minimizer) + ", ...)"
        return "(" + ", ".join(f"{v:g}" for v in self.minimizer) + ")"


REGISTRY: dict[str, BenchmarkSpec] = {
    spec.name: spec
    for spec in (
        BenchmarkSpec("booth", 2, ((-10.0, 10.0),), 0.0, (1.0, 3.0), _pair(booth)),
        BenchmarkSpec("beale", 2, ((-4.5, 4.5),), 0.0, (3.0, 0.5), _pair(beale)),
        BenchmarkSpec(
            "goldstein_price", 2, ((-2.0, 2.0),), 3.0, (0.0, -1.0), _pair(goldstein_price)
        ),
        BenchmarkSpec(
            "mccormick",
            2,
            ((-1.5, 4.0), (-3.0, 4.0)),
            -1.9133,
            (-0.54719, -1.54719),
            _pair(mccormick),
        ),
        BenchmarkSpec(
            "three_hump_camel", 2, ((-5.0, 5.0),), 0.0, (0.0, 0.0), _pair(three_hump_camel)
        ),
        BenchmarkSpec("sphere", None, ((-100.0, 100.0),), 0.0, (0.0,), sphere),
        BenchmarkSpec("rosenbrock", None, ((-30.0, 30.0),), 0.0, (1.0,), rosenbrock),
    )
}


def make_problem(name: str, dimension: int = 2) -> ObjectiveProblem:
    """Build the named benchmark as a box-constrained problem.

    The five two-dimensional functions accept only ``dimension=2``; sphere
    and rosenbrock accept any ``dimension >= 2``.
    """
    spec = REGISTRY.get(name)
    if spec is None:
        raise ConfigurationError(
            f"unknown function {name!r}; choose from: {', '.join(REGISTRY)}"
        )
    if spec.fixed_dimension is not None and dimension != spec.fixed_dimension:
        raise ConfigurationError(
            f"function {name!r} is fixed to dimension {spec.fixed_dimension}, "
            f"got dimension={dimension}"
        )
    if spec.fixed_dimension is None and dimension < 2:
        raise ConfigurationError(
            f"function {name!r} needs dimension >= 2, got dimension={dimension}"
        )
    bounds = spec.bounds * dimension if len(spec.bounds) == 1 else spec.bounds
    minimizer = spec.minimizer * dimension if len(spec.minimizer) == 1 else spec.minimizer
    return ObjectiveProblem(
        dimension=dimension,
        lower_bounds=np.array([b[0] for b in bounds]),
        upper_bounds=np.array([b[1] for b in bounds]),
        evaluator=spec.func,
        known_minimum_value=spec.known_minimum_value,
        known_minimizer=np.array(minimizer),
    )
