"""Core domain types for depot rostering.

A depot day is divided into six fixed, overlapping 8-hour shifts. Regular
workers are assigned to at most one shift per day over a planning horizon;
temporary workers are hired per (day, shift) in whatever count is needed.
All types are immutable value objects and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

HOURS_PER_DAY = 24

#: The six fixed daily shifts as half-open [start, end) hour intervals.
STANDARD_SHIFTS: tuple[tuple[int, int], ...] = (
    (0, 8),
    (5, 13),
    (8, 16),
    (12, 20),
    (14, 22),
    (16, 24),
)


@dataclass(frozen=True)
class ShiftCatalog:
    """Ordered list of daily shifts as half-open hour intervals.

    The standard catalog has the six fixed 8-hour shifts; reduced catalogs
    are allowed for small test setups as long as every hour of the day is
    covered by at least one shift (the temp-plan decoder relies on that).
    """

    shifts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        shifts = tuple((int(s), int(e)) for s, e in self.shifts)
        object.__setattr__(self, "shifts", shifts)
        if not shifts:
            raise ValueError("catalog must contain at least one shift")
        for start, end in shifts:
            if not (0 <= start < end <= HOURS_PER_DAY):
                raise ValueError(f"shift interval [{start}, {end}) out of range")
        covered = set()
        for start, end in shifts:
            covered.update(range(start, end))
        if covered != set(range(HOURS_PER_DAY)):
            missing = sorted(set(range(HOURS_PER_DAY)) - covered)
            raise ValueError(f"catalog leaves hours uncovered: {missing}")

    @classmethod
    def standard(cls) -> "ShiftCatalog":
        return cls(STANDARD_SHIFTS)

    def __len__(self) -> int:
        return len(self.shifts)

    def shift_hours(self, shift_id: int) -> range:
        """Hours covered by one shift, as a range of whole hours."""
        if not 0 <= shift_id < len(self.shifts):
            raise IndexError(f"shift_id {shift_id} out of range 0..{len(self.shifts) - 1}")
        start, end = self.shifts[shift_id]
        return range(start, end)

    def shifts_covering(self, hour: int) -> tuple[int, ...]:
        """All shift ids whose interval contains the hour, ascending."""
        if not 0 <= hour < HOURS_PER_DAY:
            raise IndexError(f"hour {hour} out of range 0..23")
        return self._covering_by_hour[hour]

    @cached_property
    def _covering_by_hour(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(t for t, (s, e) in enumerate(self.shifts) if s <= h < e)
            for h in range(HOURS_PER_DAY)
        )

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """(shifts, 24) 0/1 matrix; entry [t, h] = 1 if shift t covers hour h."""
        mat = np.zeros((len(self.shifts), HOURS_PER_DAY), dtype=np.int64)
        for t, (start, end) in enumerate(self.shifts):
            mat[t, start:end] = 1
        mat.setflags(write=False)
        return mat

    @cached_property
    def latest_cover_by_hour(self) -> tuple[int, ...]:
        """For each hour, the covering shift with the latest end (ties: lowest id).

        This is the shift the temp-plan decoder assigns hires to, so that the
        added capacity extends as far as possible into later hours.
        """
        return tuple(
            max(cover, key=lambda t: (self.shifts[t][1], -t))
            for cover in self._covering_by_hour
        )


@dataclass(frozen=True)
class EfficiencyParams:
    """Hourly throughput per worker type plus the regular attendance cap."""

    regular_rate: int = 25
    temp_rate: int = 20
    attendance_cap: float = 0.85

    def __post_init__(self) -> None:
        if self.regular_rate <= 0:
            raise ValueError("regular_rate must be positive")
        if self.temp_rate <= 0:
            raise ValueError("temp_rate must be positive")
        if not 0 < self.attendance_cap <= 1:
            raise ValueError("attendance_cap must be in (0, 1]")


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """One rostering problem: horizon, regular pool, rates, hourly demand.

    ``demand`` is a (days, 24) integer matrix of parcels that must be sorted
    in each hour of each day. Structural problems (wrong width, negative
    entries) are reported by :func:`validate_instance` rather than raised
    here, so that files can be checked and reported on as data.
    """

    days: int = 30
    regular_pool: int = 200
    catalog: ShiftCatalog = field(default_factory=ShiftCatalog.standard)
    params: EfficiencyParams = field(default_factory=EfficiencyParams)
    demand: np.ndarray = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.demand is None:
            demand = np.zeros((self.days, HOURS_PER_DAY), dtype=np.int64)
        else:
            demand = np.asarray(self.demand)
            if demand.dtype.kind not in "iu":
                raise ValueError("demand must be an integer matrix")
            if demand.ndim != 2:
                raise ValueError("demand must be a 2-D matrix (days x hours)")
            demand = demand.astype(np.int64, copy=True)
        demand.setflags(write=False)
        object.__setattr__(self, "demand", demand)

    @property
    def max_working_days(self) -> int:
        """Attendance cap in days: floor(attendance_cap * days)."""
        # Epsilon guards against float misfloors, e.g. 0.85 * 20 -> 16.999...
        return math.floor(self.params.attendance_cap * self.days + 1e-9)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProblemInstance):
            return NotImplemented
        return (
            self.days == other.days
            and self.regular_pool == other.regular_pool
            and self.catalog == other.catalog
            and self.params == other.params
            and np.array_equal(self.demand, other.demand)
        )


@dataclass(frozen=True, eq=False)
class RegularRoster:
    """Binary assignment tensor x[day][shift][worker] for the regular pool."""

    x: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.x)
        if x.ndim != 3:
            raise ValueError("roster must be a 3-D tensor (days x shifts x workers)")
        if x.dtype != np.uint8:
            if x.dtype.kind not in "iub":
                raise ValueError("roster entries must be integers or booleans")
            x = x.astype(np.uint8)
        else:
            x = x.copy()
        if x.size and x.max() > 1:
            raise ValueError("roster entries must be 0 or 1")
        x.setflags(write=False)
        object.__setattr__(self, "x", x)

    @classmethod
    def empty(cls, days: int, shifts: int, workers: int) -> "RegularRoster":
        return cls(np.zeros((days, shifts, workers), dtype=np.uint8))

    @property
    def person_days(self) -> int:
        return int(self.x.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegularRoster):
            return NotImplemented
        return np.array_equal(self.x, other.x)


@dataclass(frozen=True, eq=False)
class TempPlan:
    """Temporary hire counts y[day][shift]; each entry is a head count."""

    y: np.ndarray

    def __post_init__(self) -> None:
        y = np.asarray(self.y)
        if y.ndim != 2:
            raise ValueError("temp plan must be a 2-D matrix (days x shifts)")
        if y.dtype.kind not in "iu":
            raise ValueError("temp plan entries must be integers")
        y = y.astype(np.int64, copy=True)
        if y.size and y.min() < 0:
            raise ValueError("temp plan entries must be non-negative")
        y.setflags(write=False)
        object.__setattr__(self, "y", y)

    @classmethod
    def empty(cls, days: int, shifts: int) -> "TempPlan":
        return cls(np.zeros((days, shifts), dtype=np.int64))

    @property
    def person_days(self) -> int:
        return int(self.y.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TempPlan):
            return NotImplemented
        return np.array_equal(self.y, other.y)


@dataclass(frozen=True, eq=False)
class Solution:
    """A roster with its decoded temp plan and cached person-day objective."""

    roster: RegularRoster
    temp_plan: TempPlan
    objective: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Solution):
            return NotImplemented
        return (
            self.objective == other.objective
            and self.roster == other.roster
            and self.temp_plan == other.temp_plan
        )


@dataclass(frozen=True)
class TraceRecord:
    """One row of a solver convergence trace."""

    iteration: int
    evaluations: int
    best_objective: int
    elapsed_ms: int = 0


#: A convergence trace is a list of per-iteration best-so-far records.
ConvergenceTrace = list[TraceRecord]


@dataclass(frozen=True)
class Violation:
    """A single constraint or format violation, with coordinates where known."""

    code: str
    message: str
    day: int | None = None
    hour: int | None = None
    shift: int | None = None
    worker: int | None = None

    def __str__(self) -> str:
        coords = ", ".join(
            f"{name}={value}"
            for name, value in (
                ("day", self.day),
                ("hour", self.hour),
                ("shift", self.shift),
                ("worker", self.worker),
            )
            if value is not None
        )
        return f"[{self.code}] {self.message}" + (f" ({coords})" if coords else "")


def validate_instance(instance: ProblemInstance) -> list[Violation]:
    """Check instance structure; returns violations (empty list means ok)."""
    violations: list[Violation] = []
    if instance.days < 1:
        violations.append(Violation("days", f"days must be >= 1, got {instance.days}"))
    if instance.regular_pool < 0:
        violations.append(
            Violation("regular_pool", f"regular_pool must be >= 0, got {instance.regular_pool}")
        )
    rows, cols = instance.demand.shape
    if rows != instance.days:
        violations.append(
            Violation(
                "demand_shape",
                f"demand has {rows} rows but the horizon is {instance.days} days",
            )
        )
    if cols != HOURS_PER_DAY:
        violations.append(
            Violation(
                "demand_row_length",
                f"demand rows have {cols} values, expected 24 hourly values",
            )
        )
    for d, h in zip(*np.nonzero(instance.demand < 0)):
        violations.append(
            Violation(
                "negative_demand",
                f"negative demand {int(instance.demand[d, h])}",
                day=int(d),
                hour=int(h),
            )
        )
    covered = set()
    for start, end in instance.catalog.shifts:
        covered.update(range(start, end))
    for h in sorted(set(range(HOURS_PER_DAY)) - covered):
        violations.append(Violation("catalog", "hour not covered by any shift", hour=h))
    return violations
