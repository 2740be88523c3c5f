"""Combinatorial oracles: nominal selection, best responses and robust evaluation."""

from .selection import (
    cheapest,
    nominal_value,
    recovery_best_response,
    second_stage_completion,
    solve_nominal_selection,
)
from .evaluation import evaluate_robust, scenario_value, worst_case_regret_scenario
from .oracle import DEFAULT_MAX_N, brute_force_robust_opt

__all__ = [
    "DEFAULT_MAX_N",
    "brute_force_robust_opt",
    "cheapest",
    "evaluate_robust",
    "nominal_value",
    "recovery_best_response",
    "scenario_value",
    "second_stage_completion",
    "solve_nominal_selection",
    "worst_case_regret_scenario",
]
