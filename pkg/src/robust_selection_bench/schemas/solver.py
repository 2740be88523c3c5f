"""Solver configuration and result schemas."""

from enum import Enum
from fractions import Fraction
from typing import Dict, Optional

from pydantic import Field, field_validator

from .base import FrozenModel, Rational


class SolveStatus(str, Enum):
    """Outcome of an LP or MILP solve."""

    OPTIMAL = "Optimal"
    FEASIBLE_TIME_LIMIT = "FeasibleTimeLimit"
    FEASIBLE_NODE_LIMIT = "FeasibleNodeLimit"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"
    NUMERICAL_ERROR = "NumericalError"
    LIMIT_NO_SOLUTION = "LimitNoSolution"


SOLUTION_STATUSES = (
    SolveStatus.OPTIMAL,
    SolveStatus.FEASIBLE_TIME_LIMIT,
    SolveStatus.FEASIBLE_NODE_LIMIT,
)


class BranchingRule(str, Enum):
    """Which fractional binary the branch-and-bound splits on."""

    MOST_FRACTIONAL = "MostFractional"
    FIRST_FRACTIONAL = "FirstFractional"


class SolverConfig(FrozenModel):
    """Tolerances and limits for solve_lp / solve_milp."""

    feasibility_tol: float = Field(1e-7, description="Row and bound violation tolerance")
    integrality_tol: float = Field(1e-6, description="Distance from {0,1} accepted as integral")
    time_limit: Optional[float] = Field(None, description="Wall-clock limit in seconds (None: unlimited)")
    node_limit: Optional[int] = Field(None, description="Branch-and-bound node limit (None: unlimited)")
    branching: BranchingRule = BranchingRule.MOST_FRACTIONAL
    stall_threshold: int = Field(1000, description="Degenerate pivots before switching to Bland's rule")
    exact_check: bool = Field(True, description="Re-check final optima in rational arithmetic")
    exact_check_max_nonzeros: int = Field(5000, description="Largest model that gets the exact re-check")

    @field_validator("feasibility_tol", "integrality_tol")
    @classmethod
    def validate_tolerance(cls, v, info):
        """Validate that tolerances are positive."""
        if not v > 0:
            raise ValueError(f"{info.field_name} must be positive, got {v}")
        return v

    @field_validator("time_limit")
    @classmethod
    def validate_time_limit(cls, v):
        """Validate that the time limit is non-negative."""
        if v is not None and v < 0:
            raise ValueError(f"time_limit must be non-negative, got {v}")
        return v

    @field_validator("node_limit", "stall_threshold", "exact_check_max_nonzeros")
    @classmethod
    def validate_positive_int(cls, v, info):
        """Validate positive integer limits."""
        if v is not None and v < 1:
            raise ValueError(f"{info.field_name} must be at least 1, got {v}")
        return v


class SolveResult(FrozenModel):
    """Outcome of a solve; values are keyed by variable name."""

    status: SolveStatus
    objective: Optional[float] = None
    exact_objective: Optional[Rational] = None
    assignment: Optional[Dict[str, float]] = None
    exact_assignment: Optional[Dict[str, Rational]] = None
    duals: Optional[Dict[str, float]] = Field(None, description="Row duals of an LP, keyed by constraint name")
    exact_duals: Optional[Dict[str, Rational]] = None
    best_bound: Optional[float] = None
    node_count: int = 0
    lp_iterations: int = 0
    wall_time: float = 0.0
    certified: bool = Field(False, description="Optimality re-checked in rational arithmetic")

    @property
    def has_solution(self) -> bool:
        return self.status in SOLUTION_STATUSES and self.assignment is not None

    def value(self, name: str) -> float:
        """Float value of a variable."""
        if self.assignment is None:
            raise KeyError(name)
        return self.assignment[name]

    def exact_value(self, name: str) -> Fraction:
        """Exact value when certified, else the float value as a Fraction."""
        if self.exact_assignment is not None:
            return self.exact_assignment[name]
        return Fraction(self.value(name))

    def best_objective(self) -> Optional[Fraction]:
        """Exact objective when certified, else the float objective as a Fraction."""
        if self.exact_objective is not None:
            return self.exact_objective
        if self.objective is None:
            return None
        return Fraction(self.objective)
