"""Test fixtures for schema tests.

This module provides the raw field data that schema tests validate and then
alter one field at a time.
"""

import pytest


@pytest.fixture
def valid_budgeted_data():
    """Valid data for a BudgetedSet."""
    return {"kind": "budgeted", "lower": (1, 1, 1), "deviation": (2, 3, 4), "gamma": "3/2"}


@pytest.fixture
def valid_recoverable_data():
    """Valid data for a Recoverable x Discrete ProblemInstance."""
    return {
        "n": 4,
        "p": 2,
        "criterion": "Recoverable",
        "first_stage_costs": (3, 1, 4, 1),
        "uncertainty": {"kind": "discrete", "scenarios": [(5, 9, 2, 6)]},
        "delta": 1,
    }


@pytest.fixture
def valid_experiment_data():
    """Valid data for an explicit ExperimentConfig grid."""
    return {
        "name": "smoke",
        "generators": ["MM-D-U", "MMR-I-U"],
        "tuples": [{"n": 6, "p": 3, "N": 4}],
        "seeds_per_cell": 2,
        "hiro_b": ["1/2", 1],
    }
