"""Head-to-head GA vs SA harness with equal evaluation budgets.

For each seed the GA runs first under a budget cap; the SA then receives
exactly the evaluation count the GA consumed, so both columns of the
comparison are spent in identical decode+objective calls.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from .ga import GaConfig, run_ga
from .model import ConvergenceTrace, ProblemInstance, Solution
from .sa import SaConfig, run_sa


@dataclass(frozen=True)
class CompareRow:
    seed: int
    ga_objective: int
    sa_objective: int
    evaluations: int


@dataclass(frozen=True)
class ComparisonResult:
    rows: tuple[CompareRow, ...]
    ga_median: float
    sa_median: float
    #: Traces of the median-final-objective run per algorithm.
    ga_trace: ConvergenceTrace
    sa_trace: ConvergenceTrace
    ga_trace_seed: int
    sa_trace_seed: int
    ga_best: Solution
    sa_best: Solution


def _median_run(finals: list[tuple[int, int]]) -> int:
    """Seed of the lower-median run; finals is a list of (objective, seed)."""
    ranked = sorted(finals)
    return ranked[(len(ranked) - 1) // 2][1]


def compare_solvers(
    instance: ProblemInstance,
    runs: int = 10,
    base_seed: int = 0,
    budget: int = 15_000,
    population_size: int = 50,
    crossover_prob: float = 0.9,
    mutation_prob: float = 0.01,
    cooling_factor: float = 0.95,
    steps_per_temperature: int = 50,
) -> ComparisonResult:
    """Run both solvers on ``runs`` consecutive seeds at the same budget.

    The GA stops at the first generation boundary past ``budget``
    evaluations; the SA's cap is set to the GA's exact consumption (its
    temperature floor is disabled so the budget is the binding stop).
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    rows = []
    ga_outcomes: dict[int, tuple[Solution, ConvergenceTrace]] = {}
    sa_outcomes: dict[int, tuple[Solution, ConvergenceTrace]] = {}
    for i in range(runs):
        seed = base_seed + i
        ga_config = GaConfig(
            population_size=population_size,
            generations=budget,
            crossover_prob=crossover_prob,
            mutation_prob=mutation_prob,
            seed=seed,
            max_evaluations=budget,
        )
        ga_best, ga_trace = run_ga(instance, ga_config)
        consumed = ga_trace[-1].evaluations
        sa_config = SaConfig(
            cooling_factor=cooling_factor,
            steps_per_temperature=steps_per_temperature,
            min_temp=0.0,
            max_evaluations=consumed,
            seed=seed,
        )
        sa_best, sa_trace = run_sa(instance, sa_config)
        ga_outcomes[seed] = (ga_best, ga_trace)
        sa_outcomes[seed] = (sa_best, sa_trace)
        rows.append(
            CompareRow(
                seed=seed,
                ga_objective=ga_best.objective,
                sa_objective=sa_best.objective,
                evaluations=consumed,
            )
        )
    ga_seed = _median_run([(r.ga_objective, r.seed) for r in rows])
    sa_seed = _median_run([(r.sa_objective, r.seed) for r in rows])
    return ComparisonResult(
        rows=tuple(rows),
        ga_median=statistics.median(r.ga_objective for r in rows),
        sa_median=statistics.median(r.sa_objective for r in rows),
        ga_trace=ga_outcomes[ga_seed][1],
        sa_trace=sa_outcomes[sa_seed][1],
        ga_trace_seed=ga_seed,
        sa_trace_seed=sa_seed,
        ga_best=min((ga_outcomes[r.seed][0] for r in rows), key=lambda s: s.objective),
        sa_best=min((sa_outcomes[r.seed][0] for r in rows), key=lambda s: s.objective),
    )


def format_table(result: ComparisonResult) -> str:
    """Aligned plain-text comparison table with per-seed and median rows."""
    header = f"{'seed':>6}  {'ga_objective':>12}  {'sa_objective':>12}  {'evaluations':>11}"
    lines = [header, "-" * len(header)]
    for row in result.rows:
        lines.append(
            f"{row.seed:>6}  {row.ga_objective:>12}  {row.sa_objective:>12}  "
            f"{row.evaluations:>11}"
        )
    lines.append("-" * len(header))
    lines.append(f"{'median':>6}  {result.ga_median:>12g}  {result.sa_median:>12g}")
    return "\n".join(lines)


def rows_csv(result: ComparisonResult) -> str:
    """Per-seed results as CSV (seed, ga_objective, sa_objective, evaluations)."""
    lines = ["seed,ga_objective,sa_objective,evaluations"]
    lines.extend(
        f"{r.seed},{r.ga_objective},{r.sa_objective},{r.evaluations}" for r in result.rows
    )
    return "\n".join(lines) + "\n"
