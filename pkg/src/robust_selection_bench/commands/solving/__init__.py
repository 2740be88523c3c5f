"""Solving commands: solve, eval and oracle."""

from .commands import register

__all__ = ["register"]
