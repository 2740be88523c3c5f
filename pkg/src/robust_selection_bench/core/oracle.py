"""Exhaustive robust optimum, used to cross-check every formulation."""

import itertools
import logging
from fractions import Fraction
from typing import Optional, Tuple

from robust_selection_bench.errors import InstanceTooLargeError, SolverError
from robust_selection_bench.schemas import (
    BudgetMode,
    BudgetedSet,
    Criterion,
    ProblemInstance,
    SelectionSolution,
    SolutionRole,
)

from .evaluation import evaluate_robust, scenario_value

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 16
DEVIATION_CHECK_MAX_N = 12


def _candidates(inst: ProblemInstance):
    if inst.criterion == Criterion.TWO_STAGE:
        for size in range(inst.p + 1):
            yield from itertools.combinations(range(inst.n), size)
    else:
        yield from itertools.combinations(range(inst.n), inst.p)


def _verify_discrete_deviations(x: SelectionSolution, inst: ProblemInstance, value: Fraction) -> None:
    """Check a DiscreteItems worst case against every pattern with Σδ <= Γ."""
    u = inst.uncertainty
    gamma = int(u.gamma)
    best = None
    for size in range(gamma + 1):
        for raised in itertools.combinations(range(inst.n), size):
            scenario = list(u.lower)
            for i in raised:
                scenario[i] += u.deviation[i]
            candidate = scenario_value(x, inst, scenario)
            if best is None or candidate > best:
                best = candidate
    if best != value:
        raise SolverError(
            f"deviation enumeration gives {best} but the evaluator reported {value} for {x.describe()}"
        )


def brute_force_robust_opt(inst: ProblemInstance, max_n: int = DEFAULT_MAX_N) -> Tuple[SelectionSolution, Fraction]:
    """Enumerate every feasible first-stage solution and keep the best.

    TwoStage instances enumerate all subsets of size at most p, every other
    criterion all p-subsets. Ties go to the lexicographically smallest item set.

    Args:
        inst: The instance
        max_n: Largest n accepted

    Returns:
        (solution, robust value)

    Raises:
        InstanceTooLargeError: If inst.n exceeds max_n
    """
    if inst.n > max_n:
        raise InstanceTooLargeError(
            f"brute force refuses n={inst.n} (limit {max_n})", n=inst.n, limit=max_n
        )
    role = SolutionRole.PARTIAL_FIRST_STAGE if inst.criterion == Criterion.TWO_STAGE else SolutionRole.FULL
    best: Optional[Tuple[Fraction, Tuple[int, ...]]] = None
    for items in _candidates(inst):
        x = SelectionSolution.from_items(items, inst.n, inst.p, role)
        value = evaluate_robust(x, inst).objective
        if best is None or (value, items) < best:
            best = (value, items)
    value, items = best
    solution = SelectionSolution.from_items(items, inst.n, inst.p, role)

    u = inst.uncertainty
    if (
        isinstance(u, BudgetedSet)
        and u.mode == BudgetMode.DISCRETE_ITEMS
        and inst.n <= DEVIATION_CHECK_MAX_N
    ):
        _verify_discrete_deviations(solution, inst, value)
    logger.debug(f"Brute force on n={inst.n}, p={inst.p}: {solution.describe()} -> {value}")
    return solution, value
