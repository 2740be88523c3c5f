"""Polynomial solvers that enumerate a dual variable over its breakpoints."""

import logging
from fractions import Fraction
from typing import Tuple

from robust_selection_bench.core import solve_nominal_selection
from robust_selection_bench.errors import UnsupportedPairingError
from robust_selection_bench.schemas import BudgetMode, Pairing, ProblemInstance, SelectionSolution

from .breakpoints import minmax_budget_breakpoints, regret_breakpoints

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


def _pos(value: Fraction) -> Fraction:
    return value if value > 0 else ZERO


def solve_minmax_budgeted_enumeration(inst: ProblemInstance) -> Tuple[SelectionSolution, Fraction]:
    """min over π of Γπ + nominal selection on the π-modified costs.

    Item budgets use l_i + [d_i − π]₊ for π ∈ {0} ∪ {d_i}; a deviation-sum
    budget uses l_i + d_i[1 − π]₊ for π ∈ {0, 1}. The first (smallest) π
    attaining the minimum wins.

    Raises:
        UnsupportedPairingError: If the instance is not MinMax×Budgeted
    """
    if inst.pairing != Pairing.MINMAX_BUDGETED:
        raise UnsupportedPairingError(f"budgeted enumeration needs MM-B, got {inst.pairing.value}")
    u = inst.uncertainty
    variable_budget = u.mode == BudgetMode.VARIABLE_BUDGET
    best = None
    for pi in minmax_budget_breakpoints(u):
        if variable_budget:
            costs = [l + d * _pos(1 - pi) for l, d in zip(u.lower, u.deviation)]
        else:
            costs = [l + _pos(d - pi) for l, d in zip(u.lower, u.deviation)]
        solution, value = solve_nominal_selection(costs, inst.p)
        value += u.gamma * pi
        logger.debug(f"pi={pi}: {solution.describe()} -> {value}")
        if best is None or value < best[1]:
            best = (solution, value)
    return best


def solve_regret_interval_enumeration(inst: ProblemInstance) -> Tuple[SelectionSolution, Fraction]:
    """min over π of −pπ + Σ[π − l_i]₊ + nominal selection on max(u_i, π) − [π − l_i]₊.

    Raises:
        UnsupportedPairingError: If the instance is not MinMaxRegret×Interval
    """
    if inst.pairing != Pairing.REGRET_INTERVAL:
        raise UnsupportedPairingError(f"regret enumeration needs MMR-I, got {inst.pairing.value}")
    u = inst.uncertainty
    upper = u.upper
    best = None
    for pi in regret_breakpoints(u.lower, u.deviation):
        gaps = [_pos(pi - l) for l in u.lower]
        costs = [max(ub, pi) - gap for ub, gap in zip(upper, gaps)]
        solution, value = solve_nominal_selection(costs, inst.p)
        value += sum(gaps, ZERO) - inst.p * pi
        if best is None or value < best[1]:
            best = (solution, value)
    return best
