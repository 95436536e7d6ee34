"""Depot rostering: regular/temp workforce scheduling via GA and SA."""

from .compare import CompareRow, ComparisonResult, compare_solvers
from .evaluate import (
    CoverageReport,
    check_feasibility,
    coverage_report,
    decode_temp_plan,
    evaluate_roster,
    objective,
    regular_capacity,
)
from .ga import GaConfig, crossover, init_population, mutate, run_ga, select_tournament
from .instance_io import (
    FileFormatError,
    generate_instance,
    read_instance,
    read_solution,
    read_trace,
    write_instance,
    write_solution,
    write_trace,
)
from .model import (
    ConvergenceTrace,
    EfficiencyParams,
    ProblemInstance,
    RegularRoster,
    ShiftCatalog,
    Solution,
    TempPlan,
    TraceRecord,
    Violation,
    validate_instance,
)
from .oracle import SearchSpaceTooLarge, enumerate_optimal
from .repair import (
    repair_all,
    repair_attendance_cap,
    repair_consecutive_days,
    repair_one_shift_per_day,
)
from .sa import SaConfig, accept, neighbor, run_sa

__version__ = "0.1.0"

__all__ = [
    "CompareRow",
    "ComparisonResult",
    "ConvergenceTrace",
    "CoverageReport",
    "EfficiencyParams",
    "FileFormatError",
    "GaConfig",
    "ProblemInstance",
    "RegularRoster",
    "SaConfig",
    "SearchSpaceTooLarge",
    "ShiftCatalog",
    "Solution",
    "TempPlan",
    "TraceRecord",
    "Violation",
    "accept",
    "check_feasibility",
    "compare_solvers",
    "coverage_report",
    "crossover",
    "decode_temp_plan",
    "enumerate_optimal",
    "evaluate_roster",
    "generate_instance",
    "init_population",
    "mutate",
    "neighbor",
    "objective",
    "read_instance",
    "read_solution",
    "read_trace",
    "regular_capacity",
    "repair_all",
    "repair_attendance_cap",
    "repair_consecutive_days",
    "repair_one_shift_per_day",
    "run_ga",
    "run_sa",
    "select_tournament",
    "validate_instance",
    "write_instance",
    "write_solution",
    "write_trace",
]
