"""Generational genetic algorithm over day-chromosome roster genotypes.

Each individual is a full roster; the per-day slice (all shifts x workers)
is the chromosome unit that crossover swaps between parents. Children are
made feasible by the repair pipeline and re-evaluated through the shared
temp-plan decoder, so the GA searches exactly the decoded solution space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .evaluate import evaluate_roster
from .model import ConvergenceTrace, ProblemInstance, RegularRoster, Solution, TraceRecord
from .repair import repair_all


@dataclass(frozen=True)
class GaConfig:
    population_size: int = 50
    generations: int = 300
    crossover_prob: float = 0.9
    mutation_prob: float = 0.01  # per worker-day gene
    tournament_size: int = 2
    elite_count: int = 1
    seed: int = 0
    #: Optional evaluation budget; checked at generation boundaries.
    max_evaluations: int | None = None

    def __post_init__(self) -> None:
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        if not 0 <= self.crossover_prob <= 1:
            raise ValueError("crossover_prob must be in [0, 1]")
        if not 0 <= self.mutation_prob <= 1:
            raise ValueError("mutation_prob must be in [0, 1]")
        if self.tournament_size < 1:
            raise ValueError("tournament_size must be >= 1")
        if not 0 <= self.elite_count < self.population_size:
            raise ValueError("elite_count must be in [0, population_size)")
        if self.max_evaluations is not None and self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1 when set")


def random_roster(instance: ProblemInstance, rng: np.random.Generator) -> RegularRoster:
    """Each worker-day independently: off with probability 0.5, else a uniform shift."""
    days, shifts, pool = instance.days, len(instance.catalog), instance.regular_pool
    off = rng.random((days, pool)) < 0.5
    chosen = rng.integers(0, shifts, size=(days, pool))
    x = np.zeros((days, shifts, pool), dtype=np.uint8)
    d_idx, s_idx = np.nonzero(~off)
    x[d_idx, chosen[d_idx, s_idx], s_idx] = 1
    return RegularRoster(x)


def init_population(
    instance: ProblemInstance, config: GaConfig, rng: np.random.Generator | None = None
) -> list[Solution]:
    """Random rosters, repaired and evaluated; one evaluation per individual."""
    if rng is None:
        rng = np.random.default_rng(config.seed)
    population = []
    for _ in range(config.population_size):
        roster = repair_all(random_roster(instance, rng), instance, rng)
        population.append(evaluate_roster(roster, instance))
    return population


def swap_day_blocks(
    xa: np.ndarray, xb: np.ndarray, day_indices: Sequence[int]
) -> tuple[np.ndarray, np.ndarray]:
    """Exchange whole day-chromosomes (shift x worker slices) between genotypes."""
    ca = xa.copy()
    cb = xb.copy()
    idx = list(day_indices)
    ca[idx] = xb[idx]
    cb[idx] = xa[idx]
    return ca, cb


def crossover(
    parent_a: Solution,
    parent_b: Solution,
    instance: ProblemInstance,
    rng: np.random.Generator,
) -> tuple[Solution, Solution]:
    """Swap a random half of the day-chromosomes, then repair and re-evaluate.

    Exactly floor(days / 2) distinct days are exchanged (15 for the default
    30-day horizon). Costs two evaluations.
    """
    days = instance.days
    picked = np.sort(rng.choice(days, size=days // 2, replace=False))
    ca, cb = swap_day_blocks(parent_a.roster.x, parent_b.roster.x, picked)
    child_a = evaluate_roster(repair_all(RegularRoster(ca), instance, rng), instance)
    child_b = evaluate_roster(repair_all(RegularRoster(cb), instance, rng), instance)
    return child_a, child_b


def mutate(
    individual: Solution,
    instance: ProblemInstance,
    config: GaConfig,
    rng: np.random.Generator,
) -> Solution:
    """Resample each worker-day gene with probability mutation_prob.

    A resampled gene takes one of the equiprobable states off-or-any-shift
    (7 states under the standard catalog). Returns the input object
    unchanged (and performs no evaluation) when no gene is hit or
    mutation_prob is 0.
    """
    days, shifts, pool = instance.days, len(instance.catalog), instance.regular_pool
    if config.mutation_prob == 0 or days * pool == 0:
        return individual
    mask = rng.random((days, pool)) < config.mutation_prob
    d_idx, s_idx = np.nonzero(mask)
    if d_idx.size == 0:
        return individual
    states = rng.integers(0, shifts + 1, size=d_idx.size)
    x = individual.roster.x.copy()
    x[d_idx, :, s_idx] = 0
    on = states > 0
    x[d_idx[on], states[on] - 1, s_idx[on]] = 1
    return evaluate_roster(repair_all(RegularRoster(x), instance, rng), instance)


def select_tournament(
    population: Sequence[Solution], config: GaConfig, rng: np.random.Generator
) -> Solution:
    """Draw tournament_size entrants with replacement; lowest objective wins.

    Ties are broken by the earlier population index.
    """
    if not population:
        raise ValueError("population must not be empty")
    entrants = rng.integers(0, len(population), size=config.tournament_size)
    winner = min(entrants, key=lambda i: (population[i].objective, i))
    return population[int(winner)]


def run_ga(
    instance: ProblemInstance,
    config: GaConfig,
    on_generation: Callable[[int, list[Solution]], None] | None = None,
    clock: Callable[[], float] | None = None,
) -> tuple[Solution, ConvergenceTrace]:
    """Run the generational loop and return the best solution plus its trace.

    Per generation: elites are copied, then the rest of the next population
    is bred by tournament selection, probabilistic day-block crossover (or
    cloning), and per-gene mutation. The trace records the best-so-far
    objective per generation, including generation 0, with the running count
    of decode+objective evaluations. Fully deterministic for a fixed seed;
    pass ``clock`` (e.g. time.perf_counter) to record real elapsed_ms at the
    cost of run-to-run trace-file identity.
    """
    rng = np.random.default_rng(config.seed)
    start = clock() if clock is not None else 0.0

    def elapsed_ms() -> int:
        return int(round((clock() - start) * 1000)) if clock is not None else 0

    population = init_population(instance, config, rng)
    evaluations = config.population_size
    best = min(population, key=lambda ind: ind.objective)
    trace: ConvergenceTrace = [TraceRecord(0, evaluations, best.objective, elapsed_ms())]
    if on_generation is not None:
        on_generation(0, population)

    for generation in range(1, config.generations + 1):
        if config.max_evaluations is not None and evaluations >= config.max_evaluations:
            break
        ranked = sorted(range(len(population)), key=lambda i: (population[i].objective, i))
        next_population = [population[i] for i in ranked[: config.elite_count]]
        while len(next_population) < config.population_size:
            parent_a = select_tournament(population, config, rng)
            parent_b = select_tournament(population, config, rng)
            if rng.random() < config.crossover_prob:
                child_a, child_b = crossover(parent_a, parent_b, instance, rng)
                evaluations += 2
            else:
                child_a, child_b = parent_a, parent_b
            mutated = mutate(child_a, instance, config, rng)
            if mutated is not child_a:
                evaluations += 1
            next_population.append(mutated)
            if len(next_population) < config.population_size:
                mutated_b = mutate(child_b, instance, config, rng)
                if mutated_b is not child_b:
                    evaluations += 1
                next_population.append(mutated_b)
        population = next_population
        generation_best = min(population, key=lambda ind: ind.objective)
        if generation_best.objective < best.objective:
            best = generation_best
        trace.append(TraceRecord(generation, evaluations, best.objective, elapsed_ms()))
        if on_generation is not None:
            on_generation(generation, population)
    return best, trace
