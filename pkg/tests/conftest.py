"""Shared test configuration and fixtures.

This module provides shared pytest fixtures and configuration for testing
robust-selection-bench: the small worked instances most tests reuse, and the
``--run-slow`` switch for tests that solve many instances.
"""

import os

import pytest

from robust_selection_bench.schemas import ProblemInstance


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "integration: mark test as exercising several modules end to end")
    config.addinivalue_line("markers", "slow: mark test as solving many instances")


def pytest_addoption(parser):
    """Add custom command line options."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run slow tests that solve many instances",
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --run-slow is specified."""
    if not config.getoption("--run-slow"):
        skip_slow = pytest.mark.skip(reason="Need --run-slow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def clean_robsel_env(monkeypatch):
    """Remove ROBSEL_* variables so every test starts from the default configuration."""
    for name in list(os.environ):
        if name.startswith("ROBSEL_"):
            monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture
def minmax_discrete():
    """MinMax x Discrete, n=4, p=2: optimum {1,4} with value 5."""
    return ProblemInstance(
        n=4,
        p=2,
        criterion="MinMax",
        uncertainty={"kind": "discrete", "scenarios": [(1, 5, 3, 4), (4, 2, 5, 1)]},
    )


@pytest.fixture
def regret_discrete():
    """MinMaxRegret x Discrete on the same scenarios: optimum {1,4} with regret 2."""
    return ProblemInstance(
        n=4,
        p=2,
        criterion="MinMaxRegret",
        uncertainty={"kind": "discrete", "scenarios": [(1, 5, 3, 4), (4, 2, 5, 1)]},
    )


@pytest.fixture
def regret_interval():
    """MinMaxRegret x Interval, n=3, p=1: optimal regret 2."""
    return ProblemInstance(
        n=3,
        p=1,
        criterion="MinMaxRegret",
        uncertainty={"kind": "interval", "lower": (1, 2, 0), "deviation": (1, 0, 5)},
    )


@pytest.fixture
def minmax_budgeted():
    """MinMax x Budgeted (ContinuousItems), n=3, p=2, gamma=1: optimum 5."""
    return ProblemInstance(
        n=3,
        p=2,
        criterion="MinMax",
        uncertainty={"kind": "budgeted", "lower": (1, 1, 1), "deviation": (2, 3, 4), "gamma": 1},
    )


@pytest.fixture
def two_stage_discrete():
    """TwoStage x Discrete, n=3, p=2: optimum x={1} with value 3."""
    return ProblemInstance(
        n=3,
        p=2,
        criterion="TwoStage",
        first_stage_costs=(2, 10, 10),
        uncertainty={"kind": "discrete", "scenarios": [(9, 1, 8), (9, 8, 1)]},
    )


@pytest.fixture
def hiro_minmax():
    """MinMax x Discrete, n=3, p=1, hardened to 6 with b=1."""
    return ProblemInstance(
        n=3,
        p=1,
        criterion="MinMax",
        uncertainty={"kind": "discrete", "scenarios": [(1, 9, 5), (9, 1, 5)]},
    )
