"""Benchmark command: bench."""

from .commands import register

__all__ = ["register"]
