"""Error handling for robust-selection-bench.

Exceptions, formatters for CLI output, and handlers that map third-party
exceptions onto the library's error types.
"""

from .exceptions import (
    RobustSelectionError,
    ParameterError,
    UnsupportedPairingError,
    CardinalityError,
    InstanceTooLargeError,
    ParseError,
    IntegrityError,
    ModelDefectError,
    SolverError,
    HiroError,
)

from .formatters import format_error, is_robust_error
from .handlers import handle_validation_error, handle_os_error, format_validation_error

__all__ = [
    # Exceptions
    "RobustSelectionError",
    "ParameterError",
    "UnsupportedPairingError",
    "CardinalityError",
    "InstanceTooLargeError",
    "ParseError",
    "IntegrityError",
    "ModelDefectError",
    "SolverError",
    "HiroError",

    # Formatters
    "format_error",
    "is_robust_error",

    # Handlers
    "handle_validation_error",
    "handle_os_error",
    "format_validation_error",
]
