"""Utility helpers."""

from .environment import get_env_var, get_bool_env_var, get_float_env_var

__all__ = ["get_env_var", "get_bool_env_var", "get_float_env_var"]
