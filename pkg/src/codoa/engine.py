"""Core CoDOA engine: swarm state, calculation phases, and the run loop.

The Cognitive Development Optimization Algorithm keeps a swarm of particles,
each carrying a position, a cached fitness, an interactivity rate ``ir`` (the
step scale toward the best point found so far) and a signed experience
counter ``ex``.  Each iteration applies a fixed sequence of phases that grow,
decay, and redistribute interactivity while particles drift toward the
archived global best.  Minimization only; maximize by negating the objective
(see :func:`maximization_problem`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from codoa.rng import RandomStream


class ConfigurationError(ValueError):
    """Invalid algorithm parameters, problem description, or experiment setup."""


@dataclass(frozen=True)
class AlgorithmParams:
    """Tunable knobs of the optimizer.

    Defaults are the reference test settings: 50 particles, 5000 iterations,
    initial interactivity 0.5 bounded above by 10.0, maturity limit 3,
    rationality rate 2.

    ``min_ir`` is the declared lower interactivity limit (0.0 by
    convention) but is superseded operationally by ``ir_floor``: a strictly
    positive epsilon that keeps interactivity ratios divisible.
    ``per_dimension_rand`` selects whether position updates draw one random
    factor per coordinate (default) or a single factor per particle.
    """

    num_particles: int = 50
    max_iterations: int = 5000
    initial_ir: float = 0.5
    max_ir: float = 10.0
    min_ir: float = 0.0
    ir_floor: float = 1e-6
    maturity_limit: int = 3
    rationality_rate: int = 2
    initial_ex: int = 0
    per_dimension_rand: bool = True

    def __post_init__(self) -> None:
        if self.num_particles < 2:
            raise ConfigurationError(
                f"num_particles must be at least 2, got {self.num_particles}"
            )
        if self.max_iterations < 0:
            raise ConfigurationError(
                f"max_iterations must be non-negative, got {self.max_iterations}"
            )
        if not 0.0 <= self.min_ir < self.ir_floor <= self.initial_ir <= self.max_ir:
            raise ConfigurationError(
                "interactivity bounds must satisfy "
                "0 <= min_ir < ir_floor <= initial_ir <= max_ir, got "
                f"min_ir={self.min_ir}, ir_floor={self.ir_floor}, "
                f"initial_ir={self.initial_ir}, max_ir={self.max_ir}"
            )
        if self.rationality_rate < 0:
            raise ConfigurationError(
                f"rationality_rate must be non-negative, got {self.rationality_rate}"
            )


@dataclass(eq=False)
class Particle:
    """One swarm member; ``fitness`` is trusted only while ``fitness_valid``."""

    position: np.ndarray
    fitness: float
    ir: float
    ex: int
    fitness_valid: bool = True


@dataclass(frozen=True, eq=False)
class ObjectiveProblem:
    """Box-constrained minimization target."""

    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    evaluator: Callable[[np.ndarray], float]
    known_minimum_value: Optional[float] = None
    known_minimizer: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ConfigurationError(f"dimension must be positive, got {self.dimension}")
        lower = np.asarray(self.lower_bounds, dtype=float)
        upper = np.asarray(self.upper_bounds, dtype=float)
        object.__setattr__(self, "lower_bounds", lower)
        object.__setattr__(self, "upper_bounds", upper)
        if lower.shape != (self.dimension,) or upper.shape != (self.dimension,):
            raise ConfigurationError(
                f"bounds must both have shape ({self.dimension},), got "
                f"{lower.shape} and {upper.shape}"
            )
        if not np.all(lower < upper):
            raise ConfigurationError("lower_bounds must be strictly below upper_bounds")
        if self.known_minimizer is not None:
            object.__setattr__(
                self, "known_minimizer", np.asarray(self.known_minimizer, dtype=float)
            )


def maximization_problem(
    dimension: int,
    lower_bounds,
    upper_bounds,
    evaluator: Callable[[np.ndarray], float],
    known_maximum_value: Optional[float] = None,
    known_maximizer=None,
) -> ObjectiveProblem:
    """Wrap a maximization target as minimize(-f).

    The engine itself only minimizes; fitnesses reported for the returned
    problem are the negated objective values.
    """
    return ObjectiveProblem(
        dimension=dimension,
        lower_bounds=lower_bounds,
        upper_bounds=upper_bounds,
        evaluator=lambda x: -evaluator(x),
        known_minimum_value=None if known_maximum_value is None else -known_maximum_value,
        known_minimizer=known_maximizer,
    )


@dataclass(eq=False)
class SwarmState:
    """Mutable state of one run: the swarm, the best-so-far archive, counters."""

    particles: list[Particle]
    rng: RandomStream
    global_best_position: Optional[np.ndarray] = None
    global_best_fitness: float = math.inf
    best_holder_index: Optional[int] = None
    iteration: int = 0
    eval_count: int = 0
    history: list[float] = field(default_factory=list)


@dataclass(frozen=True)
class RunResult:
    """Outcome of one seeded run; plain tuples so results compare exactly."""

    best_fitness: float
    best_position: tuple[float, ...]
    best_per_iteration: tuple[float, ...]
    eval_count: int
    seed: int
    params: AlgorithmParams


def clamp_ir(value: float, params: AlgorithmParams) -> float:
    """Clamp an interactivity rate into [ir_floor, max_ir]."""
    return min(max(value, params.ir_floor), params.max_ir)


def clamp_position(pos, problem: ObjectiveProblem) -> np.ndarray:
    """Clamp each coordinate into the problem's box bounds."""
    pos = np.asarray(pos, dtype=float)
    if pos.shape != (problem.dimension,):
        raise ValueError(
            f"position has shape {pos.shape}, problem dimension is {problem.dimension}"
        )
    return np.minimum(np.maximum(pos, problem.lower_bounds), problem.upper_bounds)


def reward_best(state: SwarmState, params: AlgorithmParams) -> None:
    """Boost the interactivity of the currently fittest particle and credit it.

    Ties break to the lowest index.  The global-best archive (and with it the
    best-holder index) moves only on strict improvement.
    """
    particles = state.particles
    best_i = 0
    best_f = particles[0].fitness
    for i in range(1, len(particles)):
        f = particles[i].fitness
        if f < best_f:
            best_i, best_f = i, f
    p = particles[best_i]
    p.ir = clamp_ir(p.ir + state.rng.next() * p.ir, params)
    p.ex += 1
    if state.best_holder_index is None or best_f < state.global_best_fitness:
        state.global_best_position = p.position.copy()
        state.global_best_fitness = best_f
        state.best_holder_index = best_i


def socialization(state: SwarmState, params: AlgorithmParams) -> None:
    """Shift experience toward particles beating the swarm's mean fitness.

    Particles at or above the mean lose one experience point; particles below
    it gain one and receive an interactivity boost with a fresh random factor
    each.
    """
    particles = state.particles
    fitnesses = [p.fitness for p in particles]
    mean = math.fsum(fitnesses) / len(fitnesses)
    below = [p for p in particles if p.fitness < mean]
    draws = state.rng.draw(len(below))
    for p in particles:
        if p.fitness >= mean:
            p.ex -= 1
        else:
            p.ex += 1
    for p, u in zip(below, draws):
        p.ir = clamp_ir(p.ir + u * p.ir, params)


def decay_all_ir(state: SwarmState, params: AlgorithmParams) -> None:
    """Multiplicatively decay every particle's interactivity."""
    draws = state.rng.draw(len(state.particles))
    for p, u in zip(state.particles, draws):
        p.ir = clamp_ir(u * p.ir, params)


def move_toward_best(
    state: SwarmState,
    params: AlgorithmParams,
    problem: ObjectiveProblem,
    selector: Callable[[int, Particle], bool],
) -> None:
    """Pull every selected particle toward the archived best position.

    Each coordinate steps a random fraction of ``ir`` times the remaining
    gap, so steps overshoot the target when ``ir`` exceeds 1.  Moved
    particles are clamped to the box and their fitness caches invalidated.
    """
    selected = [p for i, p in enumerate(state.particles) if selector(i, p)]
    if not selected:
        return
    g = state.global_best_position
    k, d = len(selected), problem.dimension
    positions = np.array([p.position for p in selected])
    irs = np.array([p.ir for p in selected])
    if params.per_dimension_rand:
        u = state.rng.draw(k * d).reshape(k, d)
    else:
        u = state.rng.draw(k).reshape(k, 1)
    moved = positions + u * (irs[:, None] * (g - positions))
    np.clip(moved, problem.lower_bounds, problem.upper_bounds, out=moved)
    for j, p in enumerate(selected):
        p.position = moved[j]
        p.fitness_valid = False


def evaluate_swarm(state: SwarmState, problem: ObjectiveProblem) -> None:
    """Refresh stale fitness caches; non-finite objective values become +inf."""
    evaluator = problem.evaluator
    n = 0
    for p in state.particles:
        if p.fitness_valid:
            continue
        value = float(evaluator(p.position))
        p.fitness = value if math.isfinite(value) else math.inf
        p.fitness_valid = True
        n += 1
    state.eval_count += n


def maturation(state: SwarmState, params: AlgorithmParams) -> None:
    """Boost interactivity of low-experience particles, then reward the best.

    Positions do not change here, so cached fitnesses stay valid and no
    re-evaluation is needed.
    """
    ml = params.maturity_limit
    for p in state.particles:
        if p.ex <= ml:
            p.ir = clamp_ir(p.ir + state.rng.next() * p.ir, params)
    reward_best(state, params)


def rationalizing(state: SwarmState, params: AlgorithmParams, problem: ObjectiveProblem) -> None:
    """Rescale interactivity against the best holder's, moving strugglers.

    The reference interactivity is read once up front: the repeated boosts
    for non-negative-experience particles must not chase their own updates.
    Negative-experience particles get one boost and a move toward the best;
    the rest get the boost ``rationality_rate`` times.
    """
    b = state.particles[state.best_holder_index].ir
    for p in state.particles:
        if p.ex < 0:
            p.ir = clamp_ir(p.ir + state.rng.next() * (b / p.ir), params)
    move_toward_best(state, params, problem, lambda i, p: p.ex < 0)
    positive = [p for p in state.particles if p.ex >= 0]
    for _ in range(params.rationality_rate):
        draws = state.rng.draw(len(positive))
        for p, u in zip(positive, draws):
            p.ir = clamp_ir(p.ir + u * (b / p.ir), params)


def balancing(state: SwarmState, params: AlgorithmParams, problem: ObjectiveProblem) -> None:
    """Decay all interactivity, refresh fitnesses, reward the fittest."""
    decay_all_ir(state, params)
    evaluate_swarm(state, problem)
    reward_best(state, params)


def initialize(params: AlgorithmParams, problem: ObjectiveProblem, seed: int) -> SwarmState:
    """Scatter particles uniformly in the box, evaluate them, reward the best."""
    rng = RandomStream(seed)
    lower = problem.lower_bounds
    span = problem.upper_bounds - lower
    particles = [
        Particle(
            position=lower + rng.draw(problem.dimension) * span,
            fitness=math.inf,
            ir=params.initial_ir,
            ex=params.initial_ex,
            fitness_valid=False,
        )
        for _ in range(params.num_particles)
    ]
    state = SwarmState(particles=particles, rng=rng)
    evaluate_swarm(state, problem)
    reward_best(state, params)
    return state


def iterate(state: SwarmState, params: AlgorithmParams, problem: ObjectiveProblem) -> None:
    """One full pass of the per-iteration phase sequence.

    Order: socialization, interactivity decay, move toward best (all but the
    best holder), evaluate + reward, maturation, rationalizing, balancing.
    """
    socialization(state, params)
    decay_all_ir(state, params)
    holder = state.best_holder_index
    move_toward_best(state, params, problem, lambda i, p: i != holder)
    evaluate_swarm(state, problem)
    reward_best(state, params)
    maturation(state, params)
    rationalizing(state, params, problem)
    balancing(state, params, problem)
    state.iteration += 1
    state.history.append(state.global_best_fitness)


def run(params: AlgorithmParams, problem: ObjectiveProblem, seed: int) -> RunResult:
    """Full optimization: initialize, iterate to the budget, package the archive."""
    state = initialize(params, problem, seed)
    for _ in range(params.max_iterations):
        iterate(state, params, problem)
    return RunResult(
        best_fitness=state.global_best_fitness,
        best_position=tuple(float(v) for v in state.global_best_position),
        best_per_iteration=tuple(state.history),
        eval_count=state.eval_count,
        seed=seed,
        params=params,
    )
