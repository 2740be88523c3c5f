"""Hardening (HIRO) configuration and trace schemas."""

from enum import Enum
from typing import Optional, Tuple

from pydantic import Field, field_validator

from .base import FrozenModel, Rational
from .instances import ProblemInstance, SelectionSolution
from .solver import SolverConfig


class HiroMode(str, Enum):
    """Which vectors a hardening run perturbs."""

    FIRST_STAGE_ONLY = "FirstStageOnly"
    FIRST_AND_SECOND_STAGE = "FirstAndSecondStage"
    LOWER_BOUNDS = "LowerBounds"
    DEVIATIONS = "Deviations"
    BOTH = "Both"
    SCENARIOS = "Scenarios"


ITERATIVE_MODES = (HiroMode.SCENARIOS, HiroMode.FIRST_STAGE_ONLY, HiroMode.FIRST_AND_SECOND_STAGE)
BOX_MODES = (HiroMode.LOWER_BOUNDS, HiroMode.DEVIATIONS, HiroMode.BOTH)


class HiroConfig(FrozenModel):
    """Parameters of a hardening run."""

    b: Rational = Field(..., description="Perturbation budget per coefficient")
    c_max: Rational = Field(100, description="Global cost cap")
    time_limit: Optional[float] = Field(60.0, description="Wall-clock limit in seconds (None: unlimited)")
    max_iterations: int = Field(50, description="Master/sub iterations before stopping")
    solver_cfg: SolverConfig = Field(default_factory=SolverConfig)
    mode: Optional[HiroMode] = Field(None, description="Perturbed vectors; None picks the variant default")

    @field_validator("b")
    @classmethod
    def validate_b(cls, v):
        """Validate b >= 0."""
        if v < 0:
            raise ValueError(f"b must be non-negative, got {v}")
        return v

    @field_validator("c_max")
    @classmethod
    def validate_c_max(cls, v):
        """Validate c_max > 0."""
        if v <= 0:
            raise ValueError(f"c_max must be positive, got {v}")
        return v

    @field_validator("max_iterations")
    @classmethod
    def validate_max_iterations(cls, v):
        """Validate max_iterations >= 1."""
        if v < 1:
            raise ValueError(f"max_iterations must be at least 1, got {v}")
        return v


class HiroIteration(FrozenModel):
    """One master/sub round."""

    candidate_count: int
    master_objective: float
    robust_value: Rational = Field(..., description="Exact robust optimum of this round's instance")
    elapsed: float
    candidate: SelectionSolution = Field(..., description="Robust optimum added to the pool")


class HiroTrace(FrozenModel):
    """Iteration log and final outcome of harden_iterative."""

    iterations: Tuple[HiroIteration, ...] = ()
    hardened: ProblemInstance
    best_value: Rational
    input_value: Rational
    converged: bool
    candidates: Tuple[SelectionSolution, ...] = ()
