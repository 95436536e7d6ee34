"""Repair operators that turn arbitrary rosters into feasible ones.

Repairs only ever clear assignments, never add them, and run in a fixed
order (one shift per day, then consecutive-day runs, then attendance cap)
so later stages cannot re-violate earlier ones. Hourly coverage is not a
repair concern: the temp-plan decoder closes coverage gaps.
"""

from __future__ import annotations

import numpy as np

from .model import ProblemInstance, RegularRoster


def repair_one_shift_per_day(roster: RegularRoster, rng: np.random.Generator) -> RegularRoster:
    """Where a worker has several shifts on one day, keep one at random."""
    x = roster.x.copy()
    per_day = x.sum(axis=1)  # (days, workers)
    for d, s in zip(*np.nonzero(per_day > 1)):
        shifts_set = np.flatnonzero(x[d, :, s])
        keep = shifts_set[rng.integers(len(shifts_set))]
        x[d, :, s] = 0
        x[d, keep, s] = 1
    return RegularRoster(x)


def repair_consecutive_days(roster: RegularRoster) -> RegularRoster:
    """Clear every 8th consecutive working day, scanning days in order.

    Expects at most one shift per worker-day. After a day is cleared the
    run counter restarts, so days 1..16 of solid work lose days 8 and 16.
    """
    working = roster.x.any(axis=1)  # (days, workers)
    if int(working.sum(axis=0).max(initial=0)) < 8:
        return roster  # no worker can have an 8-day run
    x = roster.x.copy()
    run = np.zeros(x.shape[2], dtype=np.int64)
    for d in range(x.shape[0]):
        np.add(run, 1, out=run)
        np.multiply(run, working[d], out=run)
        overrun = run == 8
        if overrun.any():
            x[d, :, overrun] = 0
            run[overrun] = 0
    return RegularRoster(x)


def repair_attendance_cap(
    roster: RegularRoster, instance: ProblemInstance, rng: np.random.Generator
) -> RegularRoster:
    """Randomly drop working days of over-cap workers down to the cap."""
    x = roster.x.copy()
    cap = instance.max_working_days
    working = x.any(axis=1)
    totals = working.sum(axis=0)
    for s in np.nonzero(totals > cap)[0]:
        days = np.flatnonzero(working[:, s])
        drop = rng.choice(days, size=int(totals[s]) - cap, replace=False)
        x[drop, :, s] = 0
    return RegularRoster(x)


def repair_all(
    roster: RegularRoster, instance: ProblemInstance, rng: np.random.Generator
) -> RegularRoster:
    """Full repair pipeline; output satisfies the per-worker constraints.

    Each stage is the identity on already-feasible input and consumes rng
    draws only for actual violations, so repairing a feasible roster twice
    with any rng changes nothing.
    """
    repaired = repair_one_shift_per_day(roster, rng)
    repaired = repair_consecutive_days(repaired)
    return repair_attendance_cap(repaired, instance, rng)
