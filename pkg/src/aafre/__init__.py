"""Linear optimization over fuzzy relational equations with the Aczel-Alsina t-norm."""

from .estimator import FuzzyRelationalLP
from .exceptions import (
    AAFREError,
    DimensionError,
    DomainError,
    EmptySelectionError,
    FitError,
    InfeasibleError,
    ParseError,
    SelectionError,
    SizeError,
    ValidationError,
)
from .instance import Instance
from .io import dump_instance, emit_report, parse_instance, parse_report
from .optimizer import OptimizationReport, merge_optimum, minimize_z1, solve, split_cost
from .resolution import (
    ResolutionReport,
    candidate,
    enumerate_selections,
    feasibility,
    feasible_candidates,
    global_max,
    index_sets,
    local_max,
    local_min_candidate,
    membership,
)
from .tnorm import compose, max_compose, tnorm_eval, tnorm_residual

__version__ = "0.1.0"

__all__ = [
    "AAFREError", "DimensionError", "DomainError", "EmptySelectionError", "FitError",
    "FuzzyRelationalLP", "InfeasibleError", "Instance", "OptimizationReport", "ParseError",
    "ResolutionReport", "SelectionError", "SizeError", "ValidationError", "candidate",
    "compose", "dump_instance", "emit_report", "enumerate_selections", "feasibility",
    "feasible_candidates", "global_max", "index_sets", "local_max", "local_min_candidate",
    "max_compose", "membership", "merge_optimum", "minimize_z1", "parse_instance",
    "parse_report", "solve", "split_cost", "tnorm_eval", "tnorm_residual",
]
