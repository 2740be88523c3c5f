"""Instance commands: gen and validate."""

from .commands import register

__all__ = ["register"]
