"""Integration test configuration and fixtures.

Cross-module acceptance checks draw many small random instances. Default runs
use a reduced sample count; ``--run-slow`` switches to the full counts.
"""

import pytest


@pytest.fixture
def case_count(request):
    """Pick the quick or the full sample count for a sweep."""
    full = request.config.getoption("--run-slow")

    def count(quick: int, complete: int) -> int:
        return complete if full else quick

    return count
