"""Uncertainty set schemas.

Three kinds, discriminated by ``kind``: an explicit scenario list, an interval
box, and a budgeted box whose budget applies to the number of deviating items
(ContinuousItems, DiscreteItems) or to the total deviation (VariableBudget).
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, Literal, Tuple, Union

from pydantic import Field, field_validator, model_validator

from .base import CostVector, FrozenModel, Rational, check_cost_vector, format_rational


class BudgetMode(str, Enum):
    """How Γ restricts the deviations of a budgeted set."""

    CONTINUOUS_ITEMS = "ContinuousItems"
    DISCRETE_ITEMS = "DiscreteItems"
    VARIABLE_BUDGET = "VariableBudget"


class DiscreteSet(FrozenModel):
    """Explicit list of N scenarios."""

    kind: Literal["discrete"] = "discrete"
    scenarios: Tuple[CostVector, ...] = Field(..., description="Scenario cost vectors c^1..c^N")

    @field_validator("scenarios")
    @classmethod
    def validate_scenarios(cls, v):
        """Validate N >= 1, equal lengths and non-negative entries."""
        if len(v) == 0:
            raise ValueError("a discrete set needs at least one scenario")
        length = len(v[0])
        for j, scenario in enumerate(v):
            if len(scenario) != length:
                raise ValueError(
                    f"scenario {j + 1} has {len(scenario)} entries, expected {length}"
                )
            check_cost_vector(scenario, f"scenario {j + 1}")
        return v

    @property
    def n(self) -> int:
        return len(self.scenarios[0])

    @property
    def scenario_count(self) -> int:
        return len(self.scenarios)


class IntervalSet(FrozenModel):
    """Box [lower, lower + deviation]."""

    kind: Literal["interval"] = "interval"
    lower: CostVector = Field(..., description="Lower bounds")
    deviation: CostVector = Field(..., description="Maximum deviations")

    @field_validator("lower", "deviation")
    @classmethod
    def validate_non_negative(cls, v, info):
        """Validate that entries are non-negative."""
        return check_cost_vector(v, info.field_name)

    @model_validator(mode="after")
    def validate_lengths(self):
        """Validate that lower and deviation have equal length."""
        if len(self.lower) != len(self.deviation):
            raise ValueError(
                f"lower has {len(self.lower)} entries but deviation has {len(self.deviation)}"
            )
        return self

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def upper(self) -> Tuple[Fraction, ...]:
        return tuple(l + d for l, d in zip(self.lower, self.deviation))


class BudgetedSet(FrozenModel):
    """Box with a budget Γ on deviations."""

    kind: Literal["budgeted"] = "budgeted"
    lower: CostVector = Field(..., description="Lower bounds")
    deviation: CostVector = Field(..., description="Maximum deviations")
    gamma: Rational = Field(..., description="Budget Γ")
    mode: BudgetMode = Field(BudgetMode.CONTINUOUS_ITEMS, description="Budget interpretation")

    @field_validator("lower", "deviation")
    @classmethod
    def validate_non_negative(cls, v, info):
        """Validate that entries are non-negative."""
        return check_cost_vector(v, info.field_name)

    @model_validator(mode="after")
    def validate_budget(self):
        """Validate lengths and the Γ range for the budget mode."""
        if len(self.lower) != len(self.deviation):
            raise ValueError(
                f"lower has {len(self.lower)} entries but deviation has {len(self.deviation)}"
            )
        if self.gamma < 0:
            raise ValueError(f"gamma must be non-negative, got {format_rational(self.gamma)}")
        if self.mode != BudgetMode.VARIABLE_BUDGET and self.gamma > len(self.lower):
            raise ValueError(
                f"gamma must not exceed n={len(self.lower)} in mode {self.mode.value}"
            )
        if self.mode == BudgetMode.DISCRETE_ITEMS and self.gamma.denominator != 1:
            raise ValueError(
                f"gamma must be integral in mode DiscreteItems, got {format_rational(self.gamma)}"
            )
        return self

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def upper(self) -> Tuple[Fraction, ...]:
        return tuple(l + d for l, d in zip(self.lower, self.deviation))

    @property
    def is_continuous(self) -> bool:
        """True for the two modes whose deviations are continuous."""
        return self.mode != BudgetMode.DISCRETE_ITEMS


UncertaintySet = Annotated[
    Union[DiscreteSet, IntervalSet, BudgetedSet], Field(discriminator="kind")
]
