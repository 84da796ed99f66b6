"""Exact mixed van der Waerden numbers.

w(k[0], ..., k[r-1]) is the least n such that every r-coloring of {1, ..., n}
contains, for some color i, a k[i]-term arithmetic progression entirely in
color i.  This package computes such numbers exactly by pruned backtracking,
evaluates the closed-form two-parameter family w2(k; r), and verifies a
bundled dataset of extremal-coloring certificates.
"""

from .canon import SymmetryGroup, canonical_form, dedup, symmetry_group
from .core import (
    Coloring,
    ColoringSyntaxError,
    ColorOutOfRange,
    Instance,
    InstanceInfo,
    InvalidInstance,
    format_coloring,
    parse_coloring,
    reverse,
    validate_instance,
)
from .formula import (
    EXACT,
    LOWER_BOUND_ONLY,
    FormulaResult,
    HypothesisViolated,
    NumberTheoryContext,
    RangeTooLarge,
    extremal_coloring,
    j_value,
    jacobsthal_run,
    l_value,
    w2_formula,
)
from .search import (
    BudgetExhausted,
    SearchConfig,
    SearchOutcome,
    TraceEvent,
    compute_w,
    enumerate_maximal,
    search_trace,
)
from .table import FAST_TIER, KNOWN_W, LONG_TIER, MEDIUM_TIER
from .validity import Violation, extension_valid, find_violation, is_valid

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "Coloring",
    "ColoringSyntaxError",
    "ColorOutOfRange",
    "EXACT",
    "FAST_TIER",
    "FormulaResult",
    "HypothesisViolated",
    "Instance",
    "InstanceInfo",
    "InvalidInstance",
    "KNOWN_W",
    "LONG_TIER",
    "LOWER_BOUND_ONLY",
    "MEDIUM_TIER",
    "NumberTheoryContext",
    "RangeTooLarge",
    "SearchConfig",
    "SearchOutcome",
    "SymmetryGroup",
    "TraceEvent",
    "Violation",
    "canonical_form",
    "compute_w",
    "dedup",
    "enumerate_maximal",
    "extension_valid",
    "extremal_coloring",
    "find_violation",
    "format_coloring",
    "is_valid",
    "j_value",
    "jacobsthal_run",
    "l_value",
    "parse_coloring",
    "reverse",
    "search_trace",
    "symmetry_group",
    "validate_instance",
    "w2_formula",
    "__version__",
]
