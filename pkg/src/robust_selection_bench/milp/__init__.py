"""Built-in LP and 0-1 MILP engine.

Models are built with ModelBuilder, checked with validate_model and solved
with solve_lp (relaxation, with row duals) or solve_milp (branch-and-bound).
"""

from .model import (
    Constraint,
    MilpModel,
    ModelBuilder,
    Objective,
    Relation,
    Sense,
    Variable,
    VariableKind,
    check_model,
    validate_model,
)
from .relaxation import LinearRelaxation, solve_lp
from .branch_and_bound import BranchAndBound, solve_milp
from .lp_format import dump_lp, format_lp

__all__ = [
    "BranchAndBound",
    "Constraint",
    "LinearRelaxation",
    "MilpModel",
    "ModelBuilder",
    "Objective",
    "Relation",
    "Sense",
    "Variable",
    "VariableKind",
    "check_model",
    "dump_lp",
    "format_lp",
    "solve_lp",
    "solve_milp",
    "validate_model",
]
