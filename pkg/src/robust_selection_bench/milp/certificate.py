"""Rational re-check of a floating-point optimal basis."""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .simplex import StandardForm

logger = logging.getLogger(__name__)


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Gauss-Jordan elimination over the rationals; None if the matrix is singular."""
    size = len(rows)
    table = [list(row) + [value] for row, value in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if table[r][col] != 0), None)
        if pivot is None:
            return None
        table[col], table[pivot] = table[pivot], table[col]
        pivot_row = table[col]
        pivot_value = pivot_row[col]
        support = [k for k in range(col, size + 1) if pivot_row[k] != 0]
        for r in range(size):
            factor = table[r][col]
            if r == col or factor == 0:
                continue
            factor = factor / pivot_value
            row = table[r]
            for k in support:
                row[k] -= factor * pivot_row[k]
    return [table[r][size] / table[r][r] for r in range(size)]


def certify_basis(
    form: StandardForm, basis: np.ndarray, at_upper: np.ndarray
) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """Recompute a basic solution exactly and check primal and dual feasibility.

    Args:
        form: Standard form with object (Fraction) arrays
        basis: Basic column per row, from the floating-point solve
        at_upper: Nonbasic columns resting at their upper bound

    Returns:
        (column values, row duals) in standard form, or None if the basis is
        singular, infeasible or not optimal in exact arithmetic
    """
    matrix = form.matrix
    m, width = matrix.shape
    artificial = form.artificial
    fixed = artificial | (form.has_upper & (form.upper == 0))
    basic = np.zeros(width, dtype=bool)
    basic[basis] = True

    values = np.array([Fraction(0)] * width, dtype=object)
    for j in np.flatnonzero(~basic & at_upper):
        if artificial[j]:
            continue
        if not form.has_upper[j]:
            return None
        values[j] = form.upper[j]

    residual = form.rhs - matrix @ values if width else form.rhs.copy()
    basis_rows = [[matrix[i, j] for j in basis] for i in range(m)]
    basic_values = solve_exact(basis_rows, list(residual))
    if basic_values is None:
        logger.debug("Exact check: basis matrix is singular")
        return None
    for r, j in enumerate(basis):
        value = basic_values[r]
        if value < 0 or (artificial[j] and value != 0) or (form.has_upper[j] and value > form.upper[j]):
            logger.debug(f"Exact check: basic column {j} has infeasible value {value}")
            return None
        values[j] = value

    transposed = [[matrix[i, j] for i in range(m)] for j in basis]
    duals = solve_exact(transposed, [form.cost[j] for j in basis])
    if duals is None:
        return None
    duals = np.array(duals, dtype=object)
    reduced = form.cost - duals @ matrix if m else form.cost.copy()
    for j in np.flatnonzero(~basic & ~fixed):
        if at_upper[j] and reduced[j] > 0:
            return None
        if not at_upper[j] and reduced[j] < 0:
            logger.debug(f"Exact check: column {j} has negative reduced cost {reduced[j]}")
            return None
    return values, duals
