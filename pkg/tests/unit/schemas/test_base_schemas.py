"""Tests for base schema helpers.

This module tests the exact rational handling shared by every cost vector.
"""

from decimal import Decimal
from fractions import Fraction

import pytest
from pydantic import ValidationError

from robust_selection_bench.schemas import FrozenModel, Rational, format_rational, to_cost_vector, to_fraction


class Priced(FrozenModel):
    value: Rational


class TestToFraction:
    """Tests for to_fraction."""

    @pytest.mark.parametrize(
        "value,expected",
        [
            (3, Fraction(3)),
            ("5/2", Fraction(5, 2)),
            (" 2.5 ", Fraction(5, 2)),
            (0.1, Fraction(1, 10)),
            (Decimal("0.25"), Fraction(1, 4)),
            (Fraction(7, 3), Fraction(7, 3)),
        ],
    )
    def test_accepted_values(self, value, expected):
        """Test every accepted scalar converts exactly."""
        assert to_fraction(value) == expected

    @pytest.mark.parametrize("value", [True, float("nan"), float("inf"), "abc", "1/0", None])
    def test_rejected_values(self, value):
        """Test booleans, non-finite floats and junk are refused."""
        with pytest.raises(ValueError):
            to_fraction(value)

    def test_cost_vector(self):
        """Test vectors convert entry by entry."""
        assert to_cost_vector([1, "1/2", 0.5]) == (Fraction(1), Fraction(1, 2), Fraction(1, 2))


class TestRational:
    """Tests for the Rational field type."""

    def test_field_parses_strings(self):
        """Test model fields accept ratio strings."""
        assert Priced(value="10/4").value == Fraction(5, 2)

    def test_field_rejects_junk(self):
        """Test invalid values surface as validation errors."""
        with pytest.raises(ValidationError):
            Priced(value="ten")

    def test_json_serialization(self):
        """Test JSON output keeps exact values as strings."""
        assert Priced(value=Fraction(5, 2)).model_dump_json() == '{"value":"5/2"}'
        assert Priced(value=4).model_dump_json() == '{"value":"4"}'

    def test_frozen(self):
        """Test models are immutable."""
        priced = Priced(value=1)
        with pytest.raises(ValidationError):
            priced.value = 2


class TestFormatRational:
    """Tests for format_rational."""

    def test_integers_and_fractions(self):
        """Test integral values drop the denominator and others stay in lowest terms."""
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(Fraction(-1, 2)) == "-1/2"
