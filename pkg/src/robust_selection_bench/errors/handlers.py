"""Error handling utilities.

Maps third-party exceptions (pydantic validation, OS errors) onto the
library's error types.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import ValidationError

from .exceptions import ParameterError, RobustSelectionError

logger = logging.getLogger(__name__)


def format_validation_error(error_msg: str, errors: Optional[List[Dict[str, Any]]]) -> str:
    """Format pydantic validation errors as a bullet list.

    Args:
        error_msg: Fallback message
        errors: Output of ``ValidationError.errors()``

    Returns:
        Formatted error message
    """
    if not errors:
        return error_msg

    formatted_errors = []
    for error in errors:
        location = ".".join(str(part) for part in error.get("loc", ())) or "<root>"
        message = error.get("msg", "is invalid")
        code = error.get("type", "invalid")
        formatted_errors.append(f"- {location}: {message} ({code})")

    return "Validation failed:\n" + "\n".join(formatted_errors)


def handle_validation_error(error: ValidationError, context: Optional[str] = None) -> ParameterError:
    """Map a pydantic ValidationError to ParameterError.

    Args:
        error: The pydantic error
        context: Optional name of the schema or operation being validated

    Returns:
        ParameterError carrying the formatted messages
    """
    errors = error.errors()
    logger.debug(f"Validation failed for {context or error.title}: {len(errors)} error(s)")
    message = format_validation_error(str(error), errors)
    if context:
        message = f"{context}: {message}"
    return ParameterError(message, {"errors": [
        {"loc": list(e.get("loc", ())), "msg": e.get("msg"), "type": e.get("type")} for e in errors
    ]})


def handle_os_error(error: OSError, path: Union[str, Path]) -> RobustSelectionError:
    """Map an OS-level I/O failure to a library error.

    Args:
        error: The OSError raised by the filesystem call
        path: Path being read or written

    Returns:
        RobustSelectionError naming the path
    """
    logger.error(f"I/O failure on {path}: {error}")
    reason = error.strerror or str(error)
    return RobustSelectionError(f"I/O failure on {path}: {reason}", {"path": str(path)})
