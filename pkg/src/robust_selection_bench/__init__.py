"""Robust selection benchmark.

This package generates, hardens, solves and benchmarks instances of the
robust selection problem: choose exactly p of n items under uncertain costs,
for min-max, min-max regret, two-stage and recoverable criteria.
"""

from .cli import cli_dispatch
from .version import VERSION

__version__ = VERSION
__all__ = ["cli_dispatch", "__version__"]
