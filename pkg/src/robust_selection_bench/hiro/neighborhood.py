"""Perturbation neighborhoods of cost vectors.

A vector c̃ may move to any c with ``max(c̃_i − b, 0) <= c_i <= min(c̃_i + b, c_max)``
and ``Σc <= Σc̃``. The input always lies in its own neighborhood; b = 0 makes
it a singleton.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from pydantic import model_validator

from robust_selection_bench.errors import HiroError
from robust_selection_bench.formulations import variable_name
from robust_selection_bench.milp import ModelBuilder, Relation
from robust_selection_bench.schemas import CostVector, FrozenModel, Rational, format_rational, to_cost_vector

SNAP_DENOMINATOR = 10**6


class PerturbationNeighborhood(FrozenModel):
    """Box plus sum cap around a center vector."""

    center: CostVector
    b: Rational
    c_max: Rational = Fraction(100)

    @model_validator(mode="after")
    def validate_center(self):
        """The center must respect the cost cap, or the neighborhood would exclude it."""
        if self.b < 0:
            raise ValueError(f"b must be non-negative, got {format_rational(self.b)}")
        for i, value in enumerate(self.center):
            if value > self.c_max:
                raise ValueError(
                    f"coefficient {i + 1} is {format_rational(value)}, above the cost cap "
                    f"{format_rational(self.c_max)}"
                )
        return self

    @classmethod
    def around(cls, center: Sequence, b, c_max=100) -> "PerturbationNeighborhood":
        """Neighborhood of a vector, mapping an over-cap center to HiroError."""
        try:
            return cls(center=to_cost_vector(center), b=b, c_max=c_max)
        except ValueError as e:
            raise HiroError(f"cannot perturb vector: {e}")

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def lower_bounds(self) -> Tuple[Fraction, ...]:
        return tuple(max(c - self.b, Fraction(0)) for c in self.center)

    @property
    def upper_bounds(self) -> Tuple[Fraction, ...]:
        return tuple(min(c + self.b, self.c_max) for c in self.center)

    @property
    def cap(self) -> Fraction:
        return sum(self.center, Fraction(0))

    @property
    def is_singleton(self) -> bool:
        return self.b == 0

    def violations(self, values: Sequence) -> List[str]:
        """Exact membership defects of a vector, empty when it belongs."""
        values = to_cost_vector(values)
        if len(values) != self.n:
            return [f"vector has {len(values)} entries, expected {self.n}"]
        defects = []
        for i, (value, low, high) in enumerate(zip(values, self.lower_bounds, self.upper_bounds)):
            if not low <= value <= high:
                defects.append(
                    f"entry {i + 1} = {format_rational(value)} outside "
                    f"[{format_rational(low)}, {format_rational(high)}]"
                )
        total = sum(values, Fraction(0))
        if total > self.cap:
            defects.append(f"sum {format_rational(total)} exceeds cap {format_rational(self.cap)}")
        return defects

    def contains(self, values: Sequence) -> bool:
        return not self.violations(values)

    def project(self, values: Sequence[float], exact: bool = False) -> Tuple[Fraction, ...]:
        """Map solver output onto an exact member of the neighborhood.

        Inexact values are first snapped to nearby small-denominator rationals.
        Entries are clipped to the box; an excess over the cap is removed by
        moving every entry the same fraction of the way to its lower bound,
        which keeps any non-decreasing order of the input intact.
        """
        lows, highs = self.lower_bounds, self.upper_bounds
        snapped = []
        for value, low, high in zip(values, lows, highs):
            value = Fraction(value)
            if not exact:
                value = value.limit_denominator(SNAP_DENOMINATOR)
            snapped.append(min(max(value, low), high))
        total = sum(snapped, Fraction(0))
        if total > self.cap:
            floor = sum(lows, Fraction(0))
            theta = (self.cap - floor) / (total - floor)
            snapped = [low + theta * (value - low) for value, low in zip(snapped, lows)]
        return tuple(snapped)

    def add_to(self, builder: ModelBuilder, symbol: str, *prefix: int) -> Tuple[int, ...]:
        """Add columns ``symbol[*prefix, i]`` bounded by the box, plus the sum-cap row."""
        columns = tuple(
            builder.add_continuous(variable_name(symbol, *prefix, i + 1), lower=low, upper=high)
            for i, (low, high) in enumerate(zip(self.lower_bounds, self.upper_bounds))
        )
        if not self.is_singleton:
            builder.add_constraint(
                {j: 1 for j in columns}, Relation.LE, self.cap, name=variable_name(f"cap_{symbol}", *prefix)
            )
        return columns
