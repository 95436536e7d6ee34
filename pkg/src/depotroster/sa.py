"""Simulated annealing over the same roster encoding the GA uses.

A step perturbs one worker-day gene, repairs, decodes, and applies the
Metropolis criterion; temperature drops geometrically after each plateau
of steps. The starting temperature is calibrated, unless given, so that a
median uphill move from the initial solution is accepted with probability
0.8.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .evaluate import evaluate_roster
from .ga import random_roster
from .model import ConvergenceTrace, ProblemInstance, RegularRoster, Solution, TraceRecord
from .repair import repair_all


@dataclass(frozen=True)
class SaConfig:
    #: None calibrates from sampled neighbors of the initial solution.
    initial_temp: float | None = None
    cooling_factor: float = 0.95
    steps_per_temperature: int = 50
    #: None resolves to 1e-3 x the (possibly calibrated) initial temperature.
    min_temp: float | None = None
    #: Evaluation budget; default matches the GA default of 50 x 300.
    max_evaluations: int = 15_000
    seed: int = 0
    calibration_samples: int = 100
    calibration_acceptance: float = 0.8

    def __post_init__(self) -> None:
        if self.initial_temp is not None and self.initial_temp <= 0:
            raise ValueError("initial_temp must be positive when set")
        if not 0 < self.cooling_factor < 1:
            raise ValueError("cooling_factor must be in (0, 1)")
        if self.steps_per_temperature < 1:
            raise ValueError("steps_per_temperature must be >= 1")
        if self.min_temp is not None and self.min_temp < 0:
            raise ValueError("min_temp must be >= 0 when set")
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")
        if self.calibration_samples < 1:
            raise ValueError("calibration_samples must be >= 1")
        if not 0 < self.calibration_acceptance < 1:
            raise ValueError("calibration_acceptance must be in (0, 1)")


def neighbor(
    current: Solution, instance: ProblemInstance, rng: np.random.Generator
) -> Solution:
    """Resample one uniformly chosen worker-day gene to a different state.

    The new state is uniform over the remaining off-or-shift states, so the
    pre-repair genotype always differs from the current one. Costs one
    evaluation.
    """
    days, shifts, pool = instance.days, len(instance.catalog), instance.regular_pool
    if days * pool == 0:
        raise ValueError("instance has no worker-day genes to perturb")
    d = int(rng.integers(days))
    s = int(rng.integers(pool))
    column = current.roster.x[d, :, s]
    current_state = int(np.argmax(column)) + 1 if column.any() else 0  # 0 = off
    draw = int(rng.integers(shifts))  # uniform over the other states
    new_state = draw if draw < current_state else draw + 1
    x = current.roster.x.copy()
    x[d, :, s] = 0
    if new_state > 0:
        x[d, new_state - 1, s] = 1
    return evaluate_roster(repair_all(RegularRoster(x), instance, rng), instance)


def accept(delta: float, temp: float, rng: np.random.Generator) -> bool:
    """Metropolis criterion: non-worsening moves always pass, uphill moves
    pass with probability exp(-delta/temp)."""
    if temp <= 0:
        raise ValueError("temperature must be positive")
    if delta <= 0:
        return True
    return rng.random() < math.exp(-delta / temp)


def calibrate_initial_temp(
    initial: Solution,
    instance: ProblemInstance,
    config: SaConfig,
    rng: np.random.Generator,
    samples: int,
) -> float:
    """Temperature at which the median sampled uphill move is accepted with
    the configured probability. Falls back to 1.0 if no sampled move is uphill."""
    uphill = []
    for _ in range(samples):
        candidate = neighbor(initial, instance, rng)
        delta = candidate.objective - initial.objective
        if delta > 0:
            uphill.append(delta)
    if not uphill:
        return 1.0
    return -statistics.median(uphill) / math.log(config.calibration_acceptance)


def run_sa(
    instance: ProblemInstance,
    config: SaConfig,
    clock: Callable[[], float] | None = None,
) -> tuple[Solution, ConvergenceTrace]:
    """Anneal from a random repaired roster and return the best solution seen.

    The trace holds one best-so-far record per accept/reject step (plus the
    initial record); calibration samples count toward the evaluation budget
    but are not accept/reject steps. Deterministic for a fixed seed; pass
    ``clock`` to record real elapsed_ms (forfeits trace-file identity).
    """
    rng = np.random.default_rng(config.seed)
    start = clock() if clock is not None else 0.0

    def elapsed_ms() -> int:
        return int(round((clock() - start) * 1000)) if clock is not None else 0

    current = evaluate_roster(repair_all(random_roster(instance, rng), instance, rng), instance)
    evaluations = 1
    best = current
    trace: ConvergenceTrace = [TraceRecord(0, evaluations, best.objective, elapsed_ms())]
    if instance.days * instance.regular_pool == 0:
        return best, trace  # no genes to perturb

    if config.initial_temp is not None:
        temp = config.initial_temp
    else:
        samples = min(config.calibration_samples, config.max_evaluations - evaluations)
        if samples <= 0:
            return best, trace
        temp = calibrate_initial_temp(current, instance, config, rng, samples)
        evaluations += samples
    min_temp = config.min_temp if config.min_temp is not None else 1e-3 * temp

    step = 0
    while temp > min_temp and evaluations < config.max_evaluations:
        for _ in range(config.steps_per_temperature):
            if evaluations >= config.max_evaluations:
                break
            candidate = neighbor(current, instance, rng)
            evaluations += 1
            if accept(candidate.objective - current.objective, temp, rng):
                current = candidate
                if current.objective < best.objective:
                    best = current
            step += 1
            trace.append(TraceRecord(step, evaluations, best.objective, elapsed_ms()))
        temp *= config.cooling_factor
    return best, trace
