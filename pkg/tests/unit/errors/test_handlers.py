"""Tests for error handling utilities.

This module tests the error handling utilities used to map pydantic and OS
exceptions to our custom exceptions and format error messages.
"""

from pathlib import Path

import pytest
from pydantic import ValidationError

from robust_selection_bench.errors import ParameterError, RobustSelectionError
from robust_selection_bench.errors.handlers import (
    format_validation_error,
    handle_os_error,
    handle_validation_error,
)
from robust_selection_bench.schemas import ShapeParams


def shape_error() -> ValidationError:
    with pytest.raises(ValidationError) as exc_info:
        ShapeParams(n=3, p=5, seed=-1)
    return exc_info.value


class TestFormatValidationError:
    """Tests for format_validation_error function."""

    def test_without_errors(self):
        """Test the fallback message is used when there is no error list."""
        assert format_validation_error("plain message", None) == "plain message"

    def test_bullets(self):
        """Test each error becomes a bullet with location and type."""
        formatted = format_validation_error(
            "fallback", [{"loc": ("seed",), "msg": "bad seed", "type": "value_error"}]
        )
        assert formatted == "Validation failed:\n- seed: bad seed (value_error)"

    def test_root_location(self):
        """Test model-level errors are reported at <root>."""
        formatted = format_validation_error("fallback", [{"loc": (), "msg": "p too large", "type": "value_error"}])
        assert "- <root>: p too large" in formatted


class TestHandleValidationError:
    """Tests for handle_validation_error function."""

    def test_maps_to_parameter_error(self):
        """Test pydantic errors become ParameterError with context and details."""
        result = handle_validation_error(shape_error(), "shape")
        assert isinstance(result, ParameterError)
        assert str(result).startswith("shape: Validation failed:")
        assert result.details["errors"][0]["loc"] == ["seed"]

    def test_without_context(self):
        """Test the message is the bullet list alone without context."""
        result = handle_validation_error(shape_error())
        assert str(result).startswith("Validation failed:")


class TestHandleOsError:
    """Tests for handle_os_error function."""

    def test_names_the_path(self):
        """Test OS errors keep the path and the reason."""
        error = FileNotFoundError(2, "No such file or directory")
        result = handle_os_error(error, Path("/missing/inst.csv"))
        assert isinstance(result, RobustSelectionError)
        assert "/missing/inst.csv" in str(result)
        assert "No such file or directory" in str(result)
        assert result.details == {"path": "/missing/inst.csv"}
