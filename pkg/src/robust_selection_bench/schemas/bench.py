"""Experiment configuration and result record schemas."""

from typing import Optional, Tuple

from pydantic import Field, field_validator, model_validator

from .base import FrozenModel, Rational
from .hiro import HiroMode
from .instances import DeltaSemantics
from .samplers import GeneratorId

RESULT_COLUMNS = (
    "instance_id",
    "generator",
    "n",
    "p",
    "N",
    "gamma",
    "delta",
    "b",
    "hiro_mode",
    "status",
    "objective",
    "wall_time_s",
    "nodes",
    "seed",
)

ERROR_STATUS = "Error"


class ParameterTuple(FrozenModel):
    """One grid point; unused entries stay None."""

    n: int
    p: int
    N: Optional[int] = None
    gamma: Optional[Rational] = None
    delta: Optional[int] = None


class ExperimentConfig(FrozenModel):
    """A benchmark grid, either explicit or expanded from a preset."""

    name: str = Field("experiment", description="Label used for output file names")
    preset: Optional[str] = Field(None, description="Preset id; expands generators and tuples")
    generators: Tuple[GeneratorId, ...] = ()
    tuples: Tuple[ParameterTuple, ...] = ()
    seeds_per_cell: int = Field(5, description="Instances per (generator, tuple) cell")
    first_seed: int = Field(1, description="Seed of the first instance in every cell")
    hiro_b: Tuple[Rational, ...] = Field((), description="Budgets b; each adds hardened variants")
    hiro_modes: Tuple[HiroMode, ...] = Field((), description="Modes tried for every b (empty: variant default)")
    hiro_max_iterations: int = 20
    hiro_time_limit: float = 60.0
    time_limit: float = Field(10.0, description="Solver time limit per instance, seconds")
    node_limit: Optional[int] = None
    scale: float = Field(1.0, description="Shrinks n, N, Γ, Δ and time limits of preset grids")
    desk_max_n: Optional[int] = Field(30, description="Largest n of a preset grid (None: full size)")
    delta_semantics: Optional[DeltaSemantics] = None
    workers: int = Field(1, description="Parallel worker processes")

    @field_validator("seeds_per_cell", "workers", "hiro_max_iterations", "desk_max_n")
    @classmethod
    def validate_positive(cls, v, info):
        """Validate positive counts."""
        if v is not None and v < 1:
            raise ValueError(f"{info.field_name} must be at least 1, got {v}")
        return v

    @field_validator("scale")
    @classmethod
    def validate_scale(cls, v):
        """Validate 0 < scale <= 1."""
        if not 0 < v <= 1:
            raise ValueError(f"scale must lie in (0, 1], got {v}")
        return v

    @model_validator(mode="after")
    def validate_grid(self):
        """A config names a preset or lists generators with tuples (or neither: empty grid)."""
        if self.preset is not None and (self.generators or self.tuples):
            raise ValueError("give either a preset or an explicit grid, not both")
        return self


class ResultRecord(FrozenModel):
    """One benchmark row."""

    instance_id: str
    generator: str
    n: int
    p: int
    N: Optional[int] = None
    gamma: Optional[Rational] = None
    delta: Optional[int] = None
    b: Optional[Rational] = None
    hiro_mode: Optional[str] = None
    status: str
    objective: Optional[float] = None
    exact_objective: Optional[Rational] = None
    wall_time_s: float = 0.0
    nodes: int = 0
    seed: Optional[int] = None
    error: Optional[str] = Field(None, description="Failure message for status Error")

    @property
    def sort_key(self):
        """Canonical row order."""
        return (
            self.generator,
            self.n,
            self.p,
            self.N if self.N is not None else -1,
            self.gamma if self.gamma is not None else -1,
            self.delta if self.delta is not None else -1,
            self.seed if self.seed is not None else -1,
            self.b if self.b is not None else -1,
            self.hiro_mode or "",
            self.instance_id,
        )
