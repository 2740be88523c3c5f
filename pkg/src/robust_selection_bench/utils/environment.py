"""Environment variable helpers used by the configuration loader."""

import os
from typing import Any, Optional, TypeVar

T = TypeVar('T')

TRUE_VALUES = ('true', 'yes', '1', 'y', 'on')
FALSE_VALUES = ('false', 'no', '0', 'n', 'off')


def get_env_var(name: str, default: Optional[T] = None) -> Any:
    """Get environment variable with optional default.

    Args:
        name: Environment variable name
        default: Default value if not set

    Returns:
        Environment variable value or default

    Raises:
        ValueError: If variable is not set and no default provided
    """
    value = os.getenv(name)
    if value is None:
        if default is None:
            raise ValueError(f"Environment variable {name} not set")
        return default
    return value


def get_bool_env_var(name: str, default: Optional[bool] = None) -> bool:
    """Get boolean environment variable.

    Args:
        name: Environment variable name
        default: Default value if not set

    Returns:
        Boolean value of environment variable

    Raises:
        ValueError: If variable is not set and no default provided
                   or if value is not a valid boolean
    """
    value = get_env_var(name, None if default is None else str(default))

    lowered = str(value).lower()
    if lowered in TRUE_VALUES:
        return True
    if lowered in FALSE_VALUES:
        return False

    raise ValueError(f"Environment variable {name} has invalid boolean value: {value}")


def get_float_env_var(name: str, default: Optional[float] = None) -> float:
    """Get a floating point environment variable.

    Raises:
        ValueError: If the variable is unset without default or not a number
    """
    value = get_env_var(name, None if default is None else str(default))
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ValueError(f"Environment variable {name} has invalid numeric value: {value}")
