"""Error formatting utilities.

This module renders library errors for CLI output and logs.
"""

from typing import Any

from .exceptions import (
    CardinalityError,
    HiroError,
    InstanceTooLargeError,
    IntegrityError,
    ModelDefectError,
    ParameterError,
    ParseError,
    RobustSelectionError,
    SolverError,
    UnsupportedPairingError,
)


def format_error(error: RobustSelectionError) -> str:
    """Format a library error for display.

    Args:
        error: The error to format

    Returns:
        Formatted error message with context
    """
    message = f"Error: {str(error)}"

    if isinstance(error, ParameterError):
        message = f"Parameter Error: {str(error)}"
        if error.details:
            message += f"\nDetails: {error.details}"
    elif isinstance(error, UnsupportedPairingError):
        message = f"Unsupported Pairing: {str(error)}"
    elif isinstance(error, CardinalityError):
        message = f"Cardinality Error: {str(error)}"
    elif isinstance(error, InstanceTooLargeError):
        message = f"Instance Too Large: {str(error)} (n={error.n}, limit={error.limit})"
    elif isinstance(error, ParseError):
        where = f" (line {error.line})" if error.line is not None else ""
        message = f"Parse Error{where}: {str(error)}"
    elif isinstance(error, IntegrityError):
        message = f"Integrity Error: {str(error)}"
    elif isinstance(error, ModelDefectError):
        message = f"Model Defect: {str(error)}"
        for defect in error.defects:
            message += f"\n- {defect}"
    elif isinstance(error, SolverError):
        message = f"Solver Error: {str(error)}"
    elif isinstance(error, HiroError):
        message = f"Hardening Error: {str(error)}"

    return message


def is_robust_error(error: Any) -> bool:
    """Check if an object is a library error.

    Args:
        error: Error to check

    Returns:
        True if error is a RobustSelectionError, False otherwise
    """
    return isinstance(error, RobustSelectionError)
