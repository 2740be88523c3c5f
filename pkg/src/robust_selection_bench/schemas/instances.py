"""Problem instance, solution and evaluation schemas."""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import Field, field_validator, model_validator

from .base import CostVector, FrozenModel, Rational, check_cost_vector, format_rational
from .uncertainty import BudgetMode, BudgetedSet, DiscreteSet, IntervalSet, UncertaintySet


class Criterion(str, Enum):
    """Robustness criterion."""

    MIN_MAX = "MinMax"
    MIN_MAX_REGRET = "MinMaxRegret"
    TWO_STAGE = "TwoStage"
    RECOVERABLE = "Recoverable"


class DeltaSemantics(str, Enum):
    """How the recovery parameter Δ is read.

    KeptAtLeast: at least Δ first-stage items stay (kept_min = Δ).
    ChangedAtMost: at most Δ items are exchanged (kept_min = p − Δ).
    """

    KEPT_AT_LEAST = "KeptAtLeast"
    CHANGED_AT_MOST = "ChangedAtMost"


class Pairing(str, Enum):
    """Supported criterion/uncertainty combinations."""

    MINMAX_DISCRETE = "MM-D"
    MINMAX_INTERVAL = "MM-I"
    MINMAX_BUDGETED = "MM-B"
    REGRET_INTERVAL = "MMR-I"
    REGRET_DISCRETE = "MMR-D"
    TWO_STAGE_DISCRETE = "2ST-D"
    TWO_STAGE_DISCRETE_BUDGETED = "2ST-DB"
    TWO_STAGE_CONTINUOUS_BUDGETED = "2ST-CB"
    RECOVERABLE_DISCRETE = "RR-D"
    RECOVERABLE_DISCRETE_BUDGETED = "RR-DB"
    RECOVERABLE_CONTINUOUS_BUDGETED = "RR-CB"


# MinMax×Interval is accepted but reduces to the nominal problem on upper bounds.
NOMINAL_EQUIVALENT_PAIRINGS = (Pairing.MINMAX_INTERVAL,)


def resolve_pairing(criterion: Criterion, uncertainty: Any) -> Optional[Pairing]:
    """Return the pairing for a criterion and uncertainty set, or None if unsupported."""
    if isinstance(uncertainty, DiscreteSet):
        return {
            Criterion.MIN_MAX: Pairing.MINMAX_DISCRETE,
            Criterion.MIN_MAX_REGRET: Pairing.REGRET_DISCRETE,
            Criterion.TWO_STAGE: Pairing.TWO_STAGE_DISCRETE,
            Criterion.RECOVERABLE: Pairing.RECOVERABLE_DISCRETE,
        }[criterion]
    if isinstance(uncertainty, IntervalSet):
        return {
            Criterion.MIN_MAX: Pairing.MINMAX_INTERVAL,
            Criterion.MIN_MAX_REGRET: Pairing.REGRET_INTERVAL,
        }.get(criterion)
    if isinstance(uncertainty, BudgetedSet):
        if criterion == Criterion.MIN_MAX:
            return Pairing.MINMAX_BUDGETED
        discrete = uncertainty.mode == BudgetMode.DISCRETE_ITEMS
        if criterion == Criterion.TWO_STAGE:
            return Pairing.TWO_STAGE_DISCRETE_BUDGETED if discrete else Pairing.TWO_STAGE_CONTINUOUS_BUDGETED
        if criterion == Criterion.RECOVERABLE:
            return Pairing.RECOVERABLE_DISCRETE_BUDGETED if discrete else Pairing.RECOVERABLE_CONTINUOUS_BUDGETED
    return None


class HiroLineage(FrozenModel):
    """Where a hardened instance came from."""

    parent_hash: str = Field(..., description="Content hash of the input instance")
    b: Rational = Field(..., description="Perturbation budget per coefficient")
    mode: str = Field(..., description="Hardening mode")
    iterations: int = Field(0, description="Completed master/sub iterations")
    permutation: Optional[Tuple[int, ...]] = Field(
        None, description="0-based item order used by the model (sorted deviations)"
    )
    corrections: Tuple[str, ...] = Field((), description="Model constants corrected after validation")


class Provenance(FrozenModel):
    """Generator id, seed and optional hardening lineage."""

    generator: Optional[str] = None
    seed: Optional[int] = None
    hiro: Optional[HiroLineage] = None


class ProblemInstance(FrozenModel):
    """A robust selection instance: choose exactly p of n items."""

    n: int = Field(..., description="Item count")
    p: int = Field(..., description="Selection cardinality")
    criterion: Criterion
    uncertainty: UncertaintySet
    first_stage_costs: Optional[CostVector] = Field(None, description="First-stage costs C")
    delta: Optional[int] = Field(None, description="Recovery parameter Δ")
    delta_semantics: Optional[DeltaSemantics] = None
    provenance: Provenance = Field(default_factory=Provenance)

    @model_validator(mode="before")
    @classmethod
    def default_delta_semantics(cls, data):
        """Recoverable instances default to KeptAtLeast (discrete) or ChangedAtMost (budgeted)."""
        if not isinstance(data, dict) or data.get("delta_semantics") is not None:
            return data
        criterion = data.get("criterion")
        if criterion not in (Criterion.RECOVERABLE, Criterion.RECOVERABLE.value):
            return data
        uncertainty = data.get("uncertainty")
        kind = uncertainty.get("kind") if isinstance(uncertainty, dict) else getattr(uncertainty, "kind", None)
        data = dict(data)
        data["delta_semantics"] = (
            DeltaSemantics.KEPT_AT_LEAST if kind == "discrete" else DeltaSemantics.CHANGED_AT_MOST
        )
        return data

    @field_validator("first_stage_costs")
    @classmethod
    def validate_first_stage(cls, v):
        """Validate that first-stage costs are non-negative."""
        if v is not None:
            check_cost_vector(v, "first_stage_costs")
        return v

    @model_validator(mode="after")
    def validate_instance(self):
        """Validate cardinalities, vector lengths and the pairing."""
        if not 1 <= self.p <= self.n:
            raise ValueError(f"p must satisfy 1 <= p <= n, got p={self.p}, n={self.n}")
        if self.uncertainty.n != self.n:
            raise ValueError(f"uncertainty set has {self.uncertainty.n} items, expected n={self.n}")
        needs_first_stage = self.criterion in (Criterion.TWO_STAGE, Criterion.RECOVERABLE)
        if needs_first_stage and self.first_stage_costs is None:
            raise ValueError(f"{self.criterion.value} instances need first_stage_costs")
        if not needs_first_stage and self.first_stage_costs is not None:
            raise ValueError(f"{self.criterion.value} instances take no first_stage_costs")
        if self.first_stage_costs is not None and len(self.first_stage_costs) != self.n:
            raise ValueError(
                f"first_stage_costs has {len(self.first_stage_costs)} entries, expected n={self.n}"
            )
        if self.criterion == Criterion.RECOVERABLE:
            if self.delta is None:
                raise ValueError("Recoverable instances need delta")
            if not 0 <= self.delta <= self.p:
                raise ValueError(f"delta must satisfy 0 <= delta <= p, got {self.delta}")
        elif self.delta is not None or self.delta_semantics is not None:
            raise ValueError("delta is only meaningful for Recoverable instances")
        if resolve_pairing(self.criterion, self.uncertainty) is None:
            raise ValueError(
                f"unsupported pairing {self.criterion.value} x {self.uncertainty.kind}"
            )
        return self

    @property
    def pairing(self) -> Pairing:
        return resolve_pairing(self.criterion, self.uncertainty)

    @property
    def kept_min(self) -> int:
        """Minimum number of first-stage items that must stay after recovery."""
        if self.criterion != Criterion.RECOVERABLE:
            raise ValueError("kept_min is only defined for Recoverable instances")
        if self.delta_semantics == DeltaSemantics.KEPT_AT_LEAST:
            return self.delta
        return self.p - self.delta

    def replace(self, **changes: Any) -> "ProblemInstance":
        """Return a re-validated copy with some fields replaced."""
        data: Dict[str, Any] = {name: getattr(self, name) for name in type(self).model_fields}
        data.update(changes)
        return type(self)(**data)


class SolutionRole(str, Enum):
    """Cardinality contract of a selection."""

    FULL = "Full"
    PARTIAL_FIRST_STAGE = "PartialFirstStage"


class SelectionSolution(FrozenModel):
    """A 0/1 indicator vector with its cardinality contract."""

    chosen: Tuple[int, ...] = Field(..., description="0/1 indicators, one per item")
    p: int = Field(..., description="Target cardinality")
    role: SolutionRole = SolutionRole.FULL

    @field_validator("chosen")
    @classmethod
    def validate_indicators(cls, v):
        """Validate that every entry is 0 or 1."""
        for index, value in enumerate(v):
            if value not in (0, 1):
                raise ValueError(f"chosen[{index + 1}] must be 0 or 1, got {value}")
        return v

    @model_validator(mode="after")
    def validate_cardinality(self):
        """Validate the cardinality contract of the role."""
        size = sum(self.chosen)
        if self.role == SolutionRole.FULL and size != self.p:
            raise ValueError(f"a full solution selects exactly p={self.p} items, got {size}")
        if self.role == SolutionRole.PARTIAL_FIRST_STAGE and size > self.p:
            raise ValueError(f"a first-stage solution selects at most p={self.p} items, got {size}")
        return self

    @classmethod
    def from_items(
        cls, items, n: int, p: int, role: SolutionRole = SolutionRole.FULL
    ) -> "SelectionSolution":
        """Build from 0-based item indices."""
        support = set(items)
        return cls(chosen=tuple(1 if i in support else 0 for i in range(n)), p=p, role=role)

    @property
    def n(self) -> int:
        return len(self.chosen)

    @property
    def support(self) -> Tuple[int, ...]:
        """0-based indices of chosen items."""
        return tuple(i for i, value in enumerate(self.chosen) if value)

    @property
    def size(self) -> int:
        return sum(self.chosen)

    def describe(self) -> str:
        """1-based item set, e.g. "{1,4}"."""
        return "{" + ",".join(str(i + 1) for i in self.support) + "}"


class Witness(FrozenModel):
    """The adversary's maximizing choice for an evaluated solution."""

    scenario: CostVector = Field(..., description="Realized cost vector")
    scenario_index: Optional[int] = Field(None, description="0-based scenario index for discrete sets")
    deviation: Optional[Tuple[Rational, ...]] = Field(
        None, description="Deviation pattern δ for budgeted sets"
    )


class EvaluationReport(FrozenModel):
    """Exact robust value of a solution plus its witness."""

    objective: Rational
    witness: Witness
    second_stage: Optional[SelectionSolution] = None

    def __str__(self) -> str:
        return f"objective={format_rational(self.objective)}"
