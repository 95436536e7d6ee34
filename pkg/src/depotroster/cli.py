"""Command-line interface: generate, solve, validate, compare.

Exit codes: 0 success/feasible, 1 validation failure, 2 usage error.
Every command is deterministic given its flags; traces record elapsed_ms
as 0 so repeated runs with one seed are byte-identical.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .compare import compare_solvers, format_table, rows_csv
from .evaluate import check_feasibility
from .ga import GaConfig, run_ga
from .instance_io import (
    generate_instance,
    read_instance,
    read_solution,
    write_instance,
    write_solution,
    write_trace,
)
from .plotting import plot_convergence
from .sa import SaConfig, run_sa


def _nonnegative(ctx, param, value):
    if value is not None and value < 0:
        raise click.BadParameter("must be >= 0")
    return value


def _fraction(ctx, param, value):
    if value is not None and not 0 <= value <= 1:
        raise click.BadParameter("must be in [0, 1]")
    return value


@click.group()
def main() -> None:
    """Depot rostering toolkit: schedule regular and temporary sorting staff."""


@main.command()
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--days", type=int, default=30, show_default=True)
@click.option("--workers", type=int, default=200, show_default=True, callback=_nonnegative)
@click.option("--peak", type=float, default=6000.0, show_default=True, callback=_nonnegative,
              help="Peak hourly parcel demand the daily profile scales to.")
@click.option("--noise", type=float, default=0.2, show_default=True, callback=_fraction,
              help="Uniform per-cell demand noise fraction.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True)
def generate(seed: int, days: int, workers: int, peak: float, noise: float, out: Path) -> None:
    """Generate a synthetic instance file."""
    if days < 1:
        raise click.BadParameter("must be >= 1", param_hint="'--days'")
    instance = generate_instance(
        seed=seed, days=days, regular_pool=workers, peak_demand=peak, noise_fraction=noise
    )
    write_instance(instance, out)
    click.echo(f"wrote {days}x{workers} instance to {out}")


@main.command()
@click.option("--algo", type=click.Choice(["ga", "sa"]), required=True)
@click.option("--instance", "instance_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out-solution", type=click.Path(dir_okay=False, path_type=Path),
              default=Path("solution.json"), show_default=True)
@click.option("--out-trace", type=click.Path(dir_okay=False, path_type=Path),
              default=Path("trace.csv"), show_default=True)
@click.option("--out-plot", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Optionally render the convergence curve to this image file.")
@click.option("--pop", type=int, default=50, show_default=True, help="GA population size.")
@click.option("--gens", type=int, default=300, show_default=True, help="GA generations.")
@click.option("--crossover-prob", type=float, default=0.9, show_default=True)
@click.option("--mutation-prob", type=float, default=0.01, show_default=True)
@click.option("--tournament-size", type=int, default=2, show_default=True)
@click.option("--elites", type=int, default=1, show_default=True)
@click.option("--alpha", type=float, default=0.95, show_default=True, help="SA cooling factor.")
@click.option("--steps-per-temp", type=int, default=50, show_default=True)
@click.option("--initial-temp", type=float, default=None,
              help="SA starting temperature; calibrated from sampled neighbors if omitted.")
@click.option("--min-temp", type=float, default=None,
              help="SA stop temperature; defaults to 1e-3 x the starting temperature.")
@click.option("--max-evals", type=int, default=15000, show_default=True,
              help="SA evaluation budget.")
def solve(
    algo: str,
    instance_path: Path,
    seed: int,
    out_solution: Path,
    out_trace: Path,
    out_plot: Path | None,
    pop: int,
    gens: int,
    crossover_prob: float,
    mutation_prob: float,
    tournament_size: int,
    elites: int,
    alpha: float,
    steps_per_temp: int,
    initial_temp: float | None,
    min_temp: float | None,
    max_evals: int,
) -> None:
    """Solve an instance with the chosen algorithm; writes solution and trace."""
    instance = read_instance(instance_path)
    try:
        if algo == "ga":
            config = GaConfig(
                population_size=pop,
                generations=gens,
                crossover_prob=crossover_prob,
                mutation_prob=mutation_prob,
                tournament_size=tournament_size,
                elite_count=elites,
                seed=seed,
            )
            best, trace = run_ga(instance, config)
        else:
            sa_config = SaConfig(
                cooling_factor=alpha,
                steps_per_temperature=steps_per_temp,
                initial_temp=initial_temp,
                min_temp=min_temp,
                max_evaluations=max_evals,
                seed=seed,
            )
            best, trace = run_sa(instance, sa_config)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    violations = check_feasibility(best, instance)
    if violations:
        click.echo("solver produced an infeasible solution:", err=True)
        for violation in violations:
            click.echo(f"  {violation}", err=True)
        sys.exit(1)
    write_solution(best, out_solution)
    write_trace(trace, out_trace)
    if out_plot is not None:
        plot_convergence([(algo, trace)], out_plot)
    click.echo(
        f"algo={algo} objective={best.objective} evaluations={trace[-1].evaluations} "
        f"solution={out_solution} trace={out_trace}"
    )


@main.command()
@click.option("--instance", "instance_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--solution", "solution_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path))
def validate(instance_path: Path, solution_path: Path) -> None:
    """Re-check every model constraint on a stored solution."""
    instance = read_instance(instance_path)
    solution = read_solution(solution_path)
    violations = check_feasibility(solution, instance)
    if violations:
        for violation in violations:
            click.echo(str(violation))
        click.echo(f"{len(violations)} violation(s)")
        sys.exit(1)
    click.echo("feasible")


@main.command()
@click.option("--instance", "instance_path", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--runs", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed; run i uses seed+i.")
@click.option("--budget", type=int, default=15000, show_default=True,
              help="Evaluation budget per run, shared by both algorithms.")
@click.option("--pop", type=int, default=50, show_default=True)
@click.option("--crossover-prob", type=float, default=0.9, show_default=True)
@click.option("--mutation-prob", type=float, default=0.01, show_default=True)
@click.option("--alpha", type=float, default=0.95, show_default=True)
@click.option("--steps-per-temp", type=int, default=50, show_default=True)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path),
              default=Path("compare-results"), show_default=True)
def compare(
    instance_path: Path,
    runs: int,
    seed: int,
    budget: int,
    pop: int,
    crossover_prob: float,
    mutation_prob: float,
    alpha: float,
    steps_per_temp: int,
    out_dir: Path,
) -> None:
    """Run GA vs SA at equal budgets; write traces, per-seed CSV, and a figure."""
    if runs < 1:
        raise click.BadParameter("must be >= 1", param_hint="'--runs'")
    instance = read_instance(instance_path)
    result = compare_solvers(
        instance,
        runs=runs,
        base_seed=seed,
        budget=budget,
        population_size=pop,
        crossover_prob=crossover_prob,
        mutation_prob=mutation_prob,
        cooling_factor=alpha,
        steps_per_temperature=steps_per_temp,
    )
    out_dir.mkdir(parents=True, exist_ok=True)
    write_trace(result.ga_trace, out_dir / "ga_trace.csv")
    write_trace(result.sa_trace, out_dir / "sa_trace.csv")
    (out_dir / "results.csv").write_text(rows_csv(result))
    plot_convergence(
        [
            (f"GA (seed {result.ga_trace_seed})", result.ga_trace),
            (f"SA (seed {result.sa_trace_seed})", result.sa_trace),
        ],
        out_dir / "convergence.png",
    )
    click.echo(format_table(result))
    click.echo(
        f"traces: median GA run seed {result.ga_trace_seed}, "
        f"median SA run seed {result.sa_trace_seed}; outputs in {out_dir}"
    )


if __name__ == "__main__":
    main()
