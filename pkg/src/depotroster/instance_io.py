"""Synthetic instance generation and file round-tripping.

Instances and solutions are stored as human-readable JSON with explicit
field names; convergence traces are plain CSV so they can be plotted
directly. All writers emit deterministic bytes for identical inputs.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

import numpy as np

from .model import (
    ConvergenceTrace,
    EfficiencyParams,
    ProblemInstance,
    RegularRoster,
    ShiftCatalog,
    Solution,
    TempPlan,
    TraceRecord,
    validate_instance,
)

TRACE_HEADER = "iteration,evaluations,best_objective,elapsed_ms"

#: Fixed bimodal daily demand shape: morning and evening peaks, overnight
#: trough; values span [0.1, 1.0] and scale linearly with peak_demand.
DAILY_PROFILE: tuple[float, ...] = (
    0.20, 0.15, 0.10, 0.10, 0.12, 0.18,  # overnight trough
    0.30, 0.45, 0.65, 0.85, 1.00, 0.95,  # morning ramp and peak
    0.80, 0.70, 0.60, 0.55, 0.60, 0.70,  # midday shoulder
    0.85, 0.95, 0.80, 0.60, 0.40, 0.28,  # evening peak and wind-down
)


class FileFormatError(ValueError):
    """A file failed to parse or violates the documented schema."""


def generate_instance(
    seed: int,
    days: int = 30,
    regular_pool: int = 200,
    peak_demand: float = 6000.0,
    noise_fraction: float = 0.2,
) -> ProblemInstance:
    """Build a synthetic instance from the fixed daily profile.

    demand[d][h] = round(peak_demand * profile[h] * (1 + noise)) clamped at
    zero, with noise uniform in [-noise_fraction, +noise_fraction] per cell.
    Deterministic for a given seed.
    """
    if days < 1:
        raise ValueError("days must be >= 1")
    if regular_pool < 0:
        raise ValueError("regular_pool must be >= 0")
    if peak_demand < 0:
        raise ValueError("peak_demand must be >= 0")
    if not 0 <= noise_fraction <= 1:
        raise ValueError("noise_fraction must be in [0, 1]")
    rng = np.random.default_rng(seed)
    base = peak_demand * np.asarray(DAILY_PROFILE)
    noise = rng.uniform(-noise_fraction, noise_fraction, size=(days, len(DAILY_PROFILE)))
    demand = np.rint(base[None, :] * (1.0 + noise))
    demand = np.maximum(demand, 0).astype(np.int64)
    return ProblemInstance(days=days, regular_pool=regular_pool, demand=demand)


def write_instance(instance: ProblemInstance, path: str | Path) -> None:
    lines = [
        "{",
        f'  "days": {instance.days},',
        f'  "regular_pool": {instance.regular_pool},',
        f'  "shifts": {json.dumps([list(s) for s in instance.catalog.shifts])},',
        f'  "regular_rate": {instance.params.regular_rate},',
        f'  "temp_rate": {instance.params.temp_rate},',
        f'  "attendance_cap": {json.dumps(instance.params.attendance_cap)},',
        '  "demand": [',
    ]
    rows = [json.dumps(row.tolist()) for row in instance.demand]
    lines.extend(f"    {row}," if i < len(rows) - 1 else f"    {row}" for i, row in enumerate(rows))
    lines.extend(["  ]", "}"])
    Path(path).write_text("\n".join(lines) + "\n")


def _load_json(path: str | Path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: expected a JSON object at the top level")
    return data


def _default_with_warning(data: dict, field: str, default):
    if field in data:
        return data[field]
    warnings.warn(f"instance file missing '{field}'; using default {default}", stacklevel=3)
    return default


def read_instance(path: str | Path) -> ProblemInstance:
    """Parse an instance file; missing efficiency fields fall back to defaults."""
    data = _load_json(path)
    for field in ("days", "regular_pool", "demand"):
        if field not in data:
            raise FileFormatError(f"{path}: missing required field '{field}'")
    shifts = _default_with_warning(data, "shifts", [list(s) for s in ShiftCatalog.standard().shifts])
    regular_rate = _default_with_warning(data, "regular_rate", 25)
    temp_rate = _default_with_warning(data, "temp_rate", 20)
    attendance_cap = _default_with_warning(data, "attendance_cap", 0.85)

    demand = data["demand"]
    if not isinstance(demand, list) or not all(isinstance(row, list) for row in demand):
        raise FileFormatError(f"{path}: field 'demand' must be a list of rows")
    for i, row in enumerate(demand):
        if len(row) != 24:
            raise FileFormatError(
                f"{path}: demand row {i}: expected 24 hourly values, got {len(row)}"
            )
        if not all(isinstance(v, int) for v in row):
            raise FileFormatError(f"{path}: demand row {i}: values must be integers")
    try:
        instance = ProblemInstance(
            days=int(data["days"]),
            regular_pool=int(data["regular_pool"]),
            catalog=ShiftCatalog(tuple(tuple(s) for s in shifts)),
            params=EfficiencyParams(
                regular_rate=int(regular_rate),
                temp_rate=int(temp_rate),
                attendance_cap=float(attendance_cap),
            ),
            demand=np.asarray(demand, dtype=np.int64),
        )
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc
    violations = validate_instance(instance)
    if violations:
        raise FileFormatError(f"{path}: " + "; ".join(str(v) for v in violations))
    return instance


def write_solution(solution: Solution, path: str | Path) -> None:
    """Store objective plus per-(day, shift) sorted worker ids and temp counts."""
    days, shift_count, pool = solution.roster.x.shape
    lines = [
        "{",
        f'  "objective": {solution.objective},',
        f'  "days": {days},',
        f'  "shifts": {shift_count},',
        f'  "regular_pool": {pool},',
        '  "assignments": [',
    ]
    entries = []
    for d in range(days):
        for t in range(shift_count):
            regulars = np.flatnonzero(solution.roster.x[d, t]).tolist()
            temps = int(solution.temp_plan.y[d, t])
            if regulars or temps:
                entries.append(
                    f'    {{"day": {d}, "shift": {t}, '
                    f'"regulars": {json.dumps(regulars)}, "temps": {temps}}}'
                )
    lines.extend(entry + "," if i < len(entries) - 1 else entry for i, entry in enumerate(entries))
    lines.extend(["  ]", "}"])
    Path(path).write_text("\n".join(lines) + "\n")


def read_solution(path: str | Path) -> Solution:
    data = _load_json(path)
    for field in ("objective", "days", "shifts", "regular_pool", "assignments"):
        if field not in data:
            raise FileFormatError(f"{path}: missing required field '{field}'")
    days = int(data["days"])
    shift_count = int(data["shifts"])
    pool = int(data["regular_pool"])
    x = np.zeros((days, shift_count, pool), dtype=np.uint8)
    y = np.zeros((days, shift_count), dtype=np.int64)
    for i, entry in enumerate(data["assignments"]):
        try:
            d, t = int(entry["day"]), int(entry["shift"])
            regulars, temps = entry["regulars"], int(entry["temps"])
        except (KeyError, TypeError) as exc:
            raise FileFormatError(f"{path}: assignment {i} is malformed: {exc}") from exc
        if not 0 <= d < days or not 0 <= t < shift_count:
            raise FileFormatError(f"{path}: assignment {i}: (day {d}, shift {t}) out of range")
        if temps < 0:
            raise FileFormatError(f"{path}: assignment {i}: negative temp count")
        for worker in regulars:
            if not 0 <= int(worker) < pool:
                raise FileFormatError(f"{path}: assignment {i}: worker id {worker} out of range")
            x[d, t, int(worker)] = 1
        y[d, t] = temps
    return Solution(roster=RegularRoster(x), temp_plan=TempPlan(y), objective=int(data["objective"]))


def write_trace(trace: ConvergenceTrace, path: str | Path) -> None:
    lines = [TRACE_HEADER]
    lines.extend(
        f"{r.iteration},{r.evaluations},{r.best_objective},{r.elapsed_ms}" for r in trace
    )
    Path(path).write_text("\n".join(lines) + "\n")


def read_trace(path: str | Path) -> ConvergenceTrace:
    text = Path(path).read_text().splitlines()
    if not text or text[0] != TRACE_HEADER:
        raise FileFormatError(f"{path}: expected trace header '{TRACE_HEADER}'")
    records = []
    for i, line in enumerate(text[1:], start=2):
        parts = line.split(",")
        if len(parts) != 4:
            raise FileFormatError(f"{path}: line {i}: expected 4 comma-separated values")
        try:
            records.append(TraceRecord(*(int(p) for p in parts)))
        except ValueError as exc:
            raise FileFormatError(f"{path}: line {i}: {exc}") from exc
    return records
