"""Exception classes for robust-selection-bench.

Every failure raised by the library derives from RobustSelectionError so the
CLI can map it to exit code 2 with a formatted message.
"""

from typing import Any, Dict, Optional


class RobustSelectionError(Exception):
    """Base exception for all library errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        """Initialize the error.

        Args:
            message: Error message
            details: Optional structured context (offending values, paths)
        """
        super().__init__(message)
        self.details = details


class ParameterError(RobustSelectionError):
    """Raised when an argument or schema field is invalid."""

    pass


class UnsupportedPairingError(RobustSelectionError):
    """Raised when a criterion/uncertainty combination has no implementation."""

    pass


class CardinalityError(RobustSelectionError):
    """Raised when a solution violates the cardinality contract of its role."""

    pass


class InstanceTooLargeError(RobustSelectionError):
    """Raised when an exhaustive routine is asked to handle too many items."""

    def __init__(self, message: str, n: int, limit: int) -> None:
        super().__init__(message, {"n": n, "limit": limit})
        self.n = n
        self.limit = limit


class ParseError(RobustSelectionError):
    """Raised when an instance file or manifest is malformed."""

    def __init__(
        self, message: str, line: Optional[int] = None, details: Optional[Dict[str, Any]] = None
    ) -> None:
        """Initialize parse error.

        Args:
            message: Error message
            line: 1-based line number of the offending line, when known
            details: Optional structured context
        """
        super().__init__(message, details)
        self.line = line


class IntegrityError(RobustSelectionError):
    """Raised when a manifest hash does not match the instance bytes."""

    pass


class ModelDefectError(RobustSelectionError):
    """Raised when a MilpModel fails structural validation."""

    def __init__(self, message: str, defects: Optional[list] = None) -> None:
        super().__init__(message, {"defects": list(defects or [])})
        self.defects = list(defects or [])


class SolverError(RobustSelectionError):
    """Raised on numerical failure or internal inconsistency of a solve."""

    pass


class HiroError(RobustSelectionError):
    """Raised when a hardening run cannot proceed."""

    pass
