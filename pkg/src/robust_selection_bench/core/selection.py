"""Combinatorial best responses for the selection problem.

All routines are exact (Fraction arithmetic) and break ties by lowest index.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from robust_selection_bench.errors import CardinalityError, ParameterError
from robust_selection_bench.schemas import SelectionSolution, SolutionRole, to_cost_vector


def cheapest(indices: Sequence[int], costs: Sequence[Fraction], k: int) -> List[int]:
    """The k cheapest of ``indices`` under ``costs``, ties by lowest index, in sorted order."""
    return sorted(indices, key=lambda i: (costs[i], i))[:k]


def solve_nominal_selection(costs, p: int) -> Tuple[SelectionSolution, Fraction]:
    """Pick the p cheapest items.

    Args:
        costs: Cost vector of length n
        p: Number of items to pick, 1 <= p <= n

    Returns:
        (solution, value) with ties broken by lowest index

    Raises:
        ParameterError: If p is out of range
    """
    costs = to_cost_vector(costs)
    n = len(costs)
    if not 1 <= p <= n:
        raise ParameterError(f"p must satisfy 1 <= p <= n, got p={p}, n={n}")
    chosen = cheapest(range(n), costs, p)
    value = sum((costs[i] for i in chosen), Fraction(0))
    return SelectionSolution.from_items(chosen, n, p), value


def nominal_value(costs: Sequence[Fraction], p: int) -> Fraction:
    """Value of the p cheapest items (no solution object)."""
    return sum(sorted(costs)[:p], Fraction(0))


def second_stage_completion(x: SelectionSolution, c, p: int) -> Tuple[SelectionSolution, Fraction]:
    """Complete a partial first-stage solution at second-stage prices.

    Returns the p − |x| cheapest items outside supp(x) as a partial solution y
    together with its cost Q(x, c).

    Raises:
        CardinalityError: If x already selects more than p items
    """
    c = to_cost_vector(c)
    if len(c) != x.n:
        raise ParameterError(f"cost vector has {len(c)} entries, solution has {x.n}")
    if x.size > p:
        raise CardinalityError(f"first-stage solution selects {x.size} items, more than p={p}")
    outside = [i for i in range(x.n) if not x.chosen[i]]
    chosen = cheapest(outside, c, p - x.size)
    value = sum((c[i] for i in chosen), Fraction(0))
    return SelectionSolution.from_items(chosen, x.n, p, SolutionRole.PARTIAL_FIRST_STAGE), value


def recovery_best_response(
    x: SelectionSolution, c, p: int, kept_min: int
) -> Tuple[SelectionSolution, Fraction]:
    """Cheapest p-selection keeping at least ``kept_min`` items of x.

    Exchange sweep: for every overlap k from kept_min to p take the k cheapest
    items inside supp(x) and the p − k cheapest outside; the minimum wins, ties
    by smaller k.

    Raises:
        CardinalityError: If kept_min lies outside [0, p] or x is not a full solution
    """
    c = to_cost_vector(c)
    n = x.n
    if len(c) != n:
        raise ParameterError(f"cost vector has {len(c)} entries, solution has {n}")
    if not 0 <= kept_min <= p:
        raise CardinalityError(f"kept_min must satisfy 0 <= kept_min <= p={p}, got {kept_min}")
    if x.size != p:
        raise CardinalityError(f"recovery needs a full solution with p={p} items, got {x.size}")

    inside = cheapest(x.support, c, p)
    outside = cheapest([i for i in range(n) if not x.chosen[i]], c, n - p)
    best_items: List[int] = []
    best_value = None
    for k in range(kept_min, p + 1):
        if p - k > len(outside):
            continue
        items = inside[:k] + outside[: p - k]
        value = sum((c[i] for i in items), Fraction(0))
        if best_value is None or value < best_value:
            best_items, best_value = items, value
    return SelectionSolution.from_items(best_items, n, p), best_value
