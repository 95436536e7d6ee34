"""Coverage computation, temp-plan decoding, objective, and feasibility checks.

Everything here is a pure function of its inputs, so fitness evaluation can
run concurrently across candidate rosters without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (
    ProblemInstance,
    RegularRoster,
    Solution,
    TempPlan,
    Violation,
)


@dataclass(frozen=True)
class CoverageReport:
    """Deliverable parcels/hour (capacity) and unmet demand (shortfall), both (days, 24)."""

    capacity: np.ndarray
    shortfall: np.ndarray


def _check_roster_dims(roster: RegularRoster, instance: ProblemInstance) -> None:
    expected = (instance.days, len(instance.catalog), instance.regular_pool)
    if roster.x.shape != expected:
        raise ValueError(f"roster shape {roster.x.shape} does not match instance {expected}")


def regular_capacity(roster: RegularRoster, instance: ProblemInstance) -> np.ndarray:
    """Parcels/hour deliverable by the rostered regulars, per (day, hour)."""
    _check_roster_dims(roster, instance)
    counts = roster.x.sum(axis=2, dtype=np.int64)  # (days, shifts)
    return instance.params.regular_rate * (counts @ instance.catalog.cover_matrix)


def coverage_report(
    roster: RegularRoster, plan: TempPlan, instance: ProblemInstance
) -> CoverageReport:
    """Combined regular+temp hourly capacity and the resulting shortfall."""
    capacity = regular_capacity(roster, instance)
    if plan.y.shape != (instance.days, len(instance.catalog)):
        raise ValueError(
            f"temp plan shape {plan.y.shape} does not match instance "
            f"({instance.days}, {len(instance.catalog)})"
        )
    capacity = capacity + instance.params.temp_rate * (plan.y @ instance.catalog.cover_matrix)
    shortfall = np.maximum(instance.demand - capacity, 0)
    return CoverageReport(capacity=capacity, shortfall=shortfall)


def decode_temp_plan(roster: RegularRoster, instance: ProblemInstance) -> TempPlan:
    """Derive the temp hires that close the roster's hourly coverage gaps.

    Each day is scanned in ascending hour order. Whenever the residual
    shortfall at an hour is positive, ceil(shortfall / temp_rate) temps are
    added to the covering shift with the latest end time (ties broken by the
    lowest shift id) and capacity is updated before continuing, so one batch
    of hires can also cover later hours. The result always satisfies hourly
    coverage: every hour has at least one covering shift.
    """
    _check_roster_dims(roster, instance)
    catalog = instance.catalog
    temp_rate = instance.params.temp_rate
    pick = catalog.latest_cover_by_hour
    shifts = catalog.shifts
    counts = roster.x.sum(axis=2, dtype=np.int64)
    capacity = instance.params.regular_rate * (counts @ catalog.cover_matrix)
    residuals = (instance.demand - capacity).tolist()  # python ints: the scan is hot
    y = np.zeros((instance.days, len(catalog)), dtype=np.int64)
    for d in range(instance.days):
        residual = residuals[d]
        for h in range(len(residual)):
            short = residual[h]
            if short > 0:
                t = pick[h]
                k = -(-short // temp_rate)
                y[d, t] += k
                added = k * temp_rate
                # Hours before h stay <= 0 and are never revisited, so only
                # the tail of the chosen shift's interval needs updating.
                for hh in range(h, shifts[t][1]):
                    residual[hh] -= added
    return TempPlan(y)


def objective(roster: RegularRoster, plan: TempPlan) -> int:
    """Total person-days: rostered regular worker-days plus temp hires."""
    if roster.x.shape[:2] != plan.y.shape:
        raise ValueError(
            f"roster days/shifts {roster.x.shape[:2]} do not match temp plan {plan.y.shape}"
        )
    return int(roster.x.sum()) + int(plan.y.sum())


def evaluate_roster(roster: RegularRoster, instance: ProblemInstance) -> Solution:
    """Decode the temp plan for a roster and package the evaluated solution.

    This is the unit of the solvers' evaluation budget: one call equals one
    decode+objective evaluation.
    """
    plan = decode_temp_plan(roster, instance)
    return Solution(roster=roster, temp_plan=plan, objective=objective(roster, plan))


def working_day_matrix(roster: RegularRoster) -> np.ndarray:
    """(days, workers) boolean matrix: worker works some shift that day."""
    return roster.x.any(axis=1)


def check_feasibility(solution: Solution, instance: ProblemInstance) -> list[Violation]:
    """Validate a full solution against every model constraint.

    Checks, in order: (a) hourly coverage, (b) at most one shift per worker
    per day, (c) no run of 8 consecutive working days, (d) per-worker total
    working days within the attendance cap, (e) the stored objective matches
    the person-day sum. Violations are returned as data with coordinates.
    """
    expected = (instance.days, len(instance.catalog), instance.regular_pool)
    if solution.roster.x.shape != expected:
        return [
            Violation(
                "dimensions",
                f"roster shape {solution.roster.x.shape} does not match instance {expected}",
            )
        ]
    if solution.temp_plan.y.shape != expected[:2]:
        return [
            Violation(
                "dimensions",
                f"temp plan shape {solution.temp_plan.y.shape} does not match instance "
                f"{expected[:2]}",
            )
        ]
    violations: list[Violation] = []

    report = coverage_report(solution.roster, solution.temp_plan, instance)
    for d, h in zip(*np.nonzero(report.shortfall > 0)):
        violations.append(
            Violation(
                "coverage",
                f"capacity {int(report.capacity[d, h])} below demand "
                f"{int(instance.demand[d, h])}",
                day=int(d),
                hour=int(h),
            )
        )

    per_day = solution.roster.x.sum(axis=1)  # (days, workers)
    for d, s in zip(*np.nonzero(per_day > 1)):
        violations.append(
            Violation(
                "multiple_shifts",
                f"worker assigned {int(per_day[d, s])} shifts in one day",
                day=int(d),
                worker=int(s),
            )
        )

    working = working_day_matrix(solution.roster)
    for s in range(instance.regular_pool):
        run_start = 0
        run_length = 0
        d = 0
        while d < instance.days:
            if working[d, s]:
                if run_length == 0:
                    run_start = d
                run_length += 1
                if run_length == 8:
                    # Report the whole maximal run once, then move past it.
                    while d + 1 < instance.days and working[d + 1, s]:
                        d += 1
                    violations.append(
                        Violation(
                            "consecutive_days",
                            f"{d - run_start + 1} consecutive working days (max 7)",
                            day=run_start,
                            worker=s,
                        )
                    )
                    run_length = 0
            else:
                run_length = 0
            d += 1

    cap = instance.max_working_days
    totals = working.sum(axis=0)
    for s in np.nonzero(totals > cap)[0]:
        violations.append(
            Violation(
                "attendance",
                f"{int(totals[s])} working days exceeds cap of {cap}",
                worker=int(s),
            )
        )

    true_objective = objective(solution.roster, solution.temp_plan)
    if solution.objective != true_objective:
        violations.append(
            Violation(
                "objective",
                f"stored objective {solution.objective} != person-day sum {true_objective}",
            )
        )
    return violations
