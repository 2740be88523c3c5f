"""Generator identifiers and shape parameters."""

from enum import Enum
from typing import Optional

from pydantic import Field, field_validator, model_validator

from .base import FrozenModel, Rational
from .instances import DeltaSemantics

MAX_SEED = 2 ** 64


class GeneratorId(str, Enum):
    """Instance generators, named <pairing>-<variant>."""

    MM_D_U = "MM-D-U"
    MM_D_1 = "MM-D-1"
    MM_D_2 = "MM-D-2"
    MM_B_U = "MM-B-U"
    MM_B_1 = "MM-B-1"
    MM_B_2 = "MM-B-2"
    MMR_I_U = "MMR-I-U"
    MMR_I_1 = "MMR-I-1"
    MMR_I_2 = "MMR-I-2"
    MMR_D_U = "MMR-D-U"
    MMR_D_1 = "MMR-D-1"
    MMR_D_2 = "MMR-D-2"
    TWO_ST_D_U = "2ST-D-U"
    TWO_ST_D_1 = "2ST-D-1"
    TWO_ST_D_2 = "2ST-D-2"
    TWO_ST_DB_U = "2ST-DB-U"
    TWO_ST_DB_1 = "2ST-DB-1"
    TWO_ST_DB_2 = "2ST-DB-2"
    TWO_ST_CB_U = "2ST-CB-U"
    TWO_ST_CB_1 = "2ST-CB-1"
    TWO_ST_CB_2 = "2ST-CB-2"
    RR_D_U = "RR-D-U"
    RR_D_1 = "RR-D-1"
    RR_D_2 = "RR-D-2"
    RR_DB_U = "RR-DB-U"
    RR_DB_1 = "RR-DB-1"
    RR_DB_2 = "RR-DB-2"
    RR_CB_U = "RR-CB-U"
    RR_CB_1 = "RR-CB-1"
    RR_CB_2 = "RR-CB-2"

    @property
    def family(self) -> str:
        """Pairing prefix, e.g. "2ST-DB"."""
        return self.value.rsplit("-", 1)[0]

    @property
    def variant(self) -> str:
        """Recipe suffix: "U", "1" or "2"."""
        return self.value.rsplit("-", 1)[1]


class ShapeParams(FrozenModel):
    """Size and budget parameters for one sampled instance."""

    n: int = Field(..., description="Item count")
    p: int = Field(..., description="Selection cardinality")
    N: Optional[int] = Field(None, description="Scenario count (discrete sets)")
    gamma: Optional[Rational] = Field(None, description="Budget Γ (budgeted sets)")
    delta: Optional[int] = Field(None, description="Recovery parameter Δ (recoverable)")
    delta_semantics: Optional[DeltaSemantics] = None
    seed: int = Field(..., description="64-bit seed")

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v):
        """Validate 0 <= seed < 2^64."""
        if not 0 <= v < MAX_SEED:
            raise ValueError(f"seed must lie in [0, 2^64), got {v}")
        return v

    @model_validator(mode="after")
    def validate_sizes(self):
        """Validate 1 <= p <= n and N >= 1."""
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if not 1 <= self.p <= self.n:
            raise ValueError(f"p must satisfy 1 <= p <= n, got p={self.p}, n={self.n}")
        if self.N is not None and self.N < 1:
            raise ValueError(f"N must be at least 1, got {self.N}")
        return self
