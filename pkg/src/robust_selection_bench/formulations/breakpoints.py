"""Candidate values of enumerated dual variables."""

from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence, Tuple

from pydantic import field_validator

from robust_selection_bench.schemas import BudgetMode, BudgetedSet, FrozenModel

ZERO = Fraction(0)


def _pos(value: Fraction) -> Fraction:
    return value if value > 0 else ZERO


class BreakpointSet(FrozenModel):
    """Sorted, deduplicated breakpoints (scalars or (α, β) pairs)."""

    values: Tuple[Any, ...]

    @field_validator("values")
    @classmethod
    def validate_sorted(cls, v):
        """Validate strictly increasing order."""
        for left, right in zip(v, v[1:]):
            if not left < right:
                raise ValueError(f"breakpoints must be strictly increasing, got {left} before {right}")
        return v

    @classmethod
    def of(cls, values: Iterable[Any]) -> "BreakpointSet":
        return cls(values=tuple(sorted(set(values))))

    @property
    def K(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def minmax_budget_breakpoints(uncertainty: BudgetedSet) -> BreakpointSet:
    """π candidates: {0} ∪ {d_i} for item budgets, {0, 1} for a deviation-sum budget."""
    if uncertainty.mode == BudgetMode.VARIABLE_BUDGET:
        return BreakpointSet.of([ZERO, Fraction(1)])
    return BreakpointSet.of([ZERO, *uncertainty.deviation])


def regret_breakpoints(lower: Sequence[Fraction], deviation: Sequence[Fraction]) -> BreakpointSet:
    """π candidates for interval regret: {0} ∪ {l_i} ∪ {d_i} ∪ {l_i + d_i}."""
    return BreakpointSet.of([ZERO, *lower, *deviation, *(l + d for l, d in zip(lower, deviation))])


def two_stage_breakpoints(lower: Sequence[Fraction], deviation: Sequence[Fraction]) -> BreakpointSet:
    """α candidates for the completion dual: {0} ∪ {l_i} ∪ {l_i + d_i}."""
    return BreakpointSet.of([ZERO, *lower, *(l + d for l, d in zip(lower, deviation))])


def recoverable_breakpoints(
    lower: Sequence[Fraction], deviation: Sequence[Fraction], with_beta: bool = True
) -> BreakpointSet:
    """(α, β) pairs for the recovery dual: α and α + β both in {0} ∪ {l_i} ∪ {l_i + d_i}.

    Without ``with_beta`` (nothing has to be kept) only β = 0 pairs are listed.
    """
    anchors = two_stage_breakpoints(lower, deviation).values
    if not with_beta:
        return BreakpointSet.of((alpha, ZERO) for alpha in anchors)
    return BreakpointSet.of((alpha, _pos(gamma - alpha)) for alpha in anchors for gamma in anchors)
