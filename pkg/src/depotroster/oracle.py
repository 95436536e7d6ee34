"""Exact brute-force solver for tiny instances.

Enumerates every roster that satisfies the per-worker constraints, decodes
temps through the same decoder the metaheuristics use, and returns the
minimum. Because it optimizes the decoded objective (roster choice with
decoder-determined temps), it is ground truth for what the GA and SA search
over; it is NOT necessarily the optimum of the underlying joint integer
program when the greedy decoder leaves redundancy.
"""

from __future__ import annotations

import itertools

import numpy as np

from .evaluate import evaluate_roster
from .model import ProblemInstance, RegularRoster, Solution


class SearchSpaceTooLarge(ValueError):
    """Raised when the raw roster state count exceeds the guard limit."""

    def __init__(self, state_count: int, guard_limit: int) -> None:
        super().__init__(
            f"search space has {state_count} roster states, exceeding the guard "
            f"limit of {guard_limit}"
        )
        self.state_count = state_count
        self.guard_limit = guard_limit


def feasible_worker_sequences(
    days: int, shift_count: int, max_working_days: int
) -> list[tuple[int, ...]]:
    """All per-worker day-state vectors obeying the run and attendance limits.

    States are 0 = off, 1..shift_count = that shift; one shift per day is
    inherent in the encoding. Sequences come out in lexicographic order with
    off sorting before any shift.
    """
    feasible = []
    for states in itertools.product(range(shift_count + 1), repeat=days):
        run = 0
        longest = 0
        total = 0
        for state in states:
            if state > 0:
                run += 1
                total += 1
                longest = max(longest, run)
            else:
                run = 0
        if longest <= 7 and total <= max_working_days:
            feasible.append(states)
    return feasible


def enumerate_optimal(
    instance: ProblemInstance, guard_limit: int = 10_000_000
) -> tuple[int, Solution]:
    """Exhaustively find the minimum decoded objective over feasible rosters.

    Enumeration order is canonical: workers in ascending significance order
    (worker 0 varies slowest), days ascending within a worker, and off before
    shift 0 before shift 1, etc. The returned solution is the first minimizer
    in that order, i.e. the lexicographically-first one.

    Raises SearchSpaceTooLarge when (shifts+1) ** (workers * days) exceeds
    guard_limit; every worker-day takes one of shifts+1 states.
    """
    days = instance.days
    shift_count = len(instance.catalog)
    pool = instance.regular_pool
    state_count = (shift_count + 1) ** (pool * days)
    if state_count > guard_limit:
        raise SearchSpaceTooLarge(state_count, guard_limit)

    sequences = feasible_worker_sequences(days, shift_count, instance.max_working_days)
    best: Solution | None = None
    for combo in itertools.product(sequences, repeat=pool):
        x = np.zeros((days, shift_count, pool), dtype=np.uint8)
        for s, states in enumerate(combo):
            for d, state in enumerate(states):
                if state > 0:
                    x[d, state - 1, s] = 1
        candidate = evaluate_roster(RegularRoster(x), instance)
        if best is None or candidate.objective < best.objective:
            best = candidate
    assert best is not None  # at least the all-off roster is feasible
    return best.objective, best
