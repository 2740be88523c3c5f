"""Base schema helpers shared by every domain schema module.

Costs are exact rationals. ``Rational`` accepts ints, ``Fraction``, decimal
strings ("2.5"), ratio strings ("5/2") and finite floats (converted through
their shortest repr, so 0.1 becomes 1/10).
"""

import math
from decimal import Decimal
from fractions import Fraction
from typing import Annotated, Any, Iterable, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def to_fraction(value: Any) -> Fraction:
    """Convert a scalar to an exact Fraction.

    Raises:
        ValueError: If the value is not a finite number
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"value must be finite, got {value}")
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational number: {value!r}")
    raise ValueError(f"cannot convert {type(value).__name__} to a rational number")


def format_rational(value: Fraction) -> str:
    """Render a rational as "a" or "a/b" (lowest terms)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    BeforeValidator(to_fraction),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]

CostVector = Tuple[Rational, ...]


def to_cost_vector(values: Iterable[Any]) -> Tuple[Fraction, ...]:
    """Convert an iterable of scalars to a tuple of Fractions."""
    return tuple(to_fraction(v) for v in values)


def check_cost_vector(values: Tuple[Fraction, ...], name: str) -> Tuple[Fraction, ...]:
    """Validate that every entry of a cost vector is non-negative."""
    for index, value in enumerate(values):
        if value < 0:
            raise ValueError(f"{name}[{index + 1}] must be non-negative, got {format_rational(value)}")
    return values


class FrozenModel(BaseModel):
    """Immutable base model; Fraction fields are allowed."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
