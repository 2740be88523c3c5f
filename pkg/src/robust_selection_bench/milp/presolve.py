"""Removal of fixed columns and empty rows ahead of the simplex."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .model import Relation

logger = logging.getLogger(__name__)


@dataclass
class ReducedProblem:
    """A min-sense LP over the columns that are not fixed by their bounds.

    Arrays share the dtype of the input: float64 for the working solve,
    object (Fractions) for exact checks.
    """

    columns: np.ndarray
    rows: np.ndarray
    matrix: np.ndarray
    rhs: np.ndarray
    relations: Sequence[Relation]
    cost: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    fixed_values: np.ndarray
    objective_offset: object
    infeasible_row: Optional[int] = None

    @property
    def infeasible(self) -> bool:
        return self.infeasible_row is not None


def presolve(matrix, rhs, relations, cost, lower, upper, tol) -> ReducedProblem:
    """Substitute fixed columns and drop rows left without coefficients.

    An emptied row whose right-hand side is violated beyond ``tol`` marks the
    problem infeasible.
    """
    m, n = matrix.shape
    fixed = lower == upper
    kept = np.flatnonzero(~fixed)
    fixed_idx = np.flatnonzero(fixed)

    fixed_values = np.zeros(n, dtype=matrix.dtype)
    if matrix.dtype == object:
        fixed_values[:] = [lower[j] if fixed[j] else 0 for j in range(n)]
    else:
        fixed_values[fixed_idx] = lower[fixed_idx]

    reduced_rhs = rhs.copy()
    offset = 0
    if len(fixed_idx):
        reduced_rhs = rhs - matrix[:, fixed_idx] @ fixed_values[fixed_idx]
        offset = cost[fixed_idx] @ fixed_values[fixed_idx]

    sub = matrix[:, kept]
    nonempty = (sub != 0).any(axis=1) if len(kept) else np.zeros(m, dtype=bool)
    infeasible_row = None
    for i in np.flatnonzero(~nonempty):
        value = reduced_rhs[i]
        relation = relations[i]
        violated = (
            (relation == Relation.LE and value < -tol)
            or (relation == Relation.GE and value > tol)
            or (relation == Relation.EQ and abs(value) > tol)
        )
        if violated:
            infeasible_row = int(i)
            logger.debug(f"Row {i} is empty after substitution and violated by {value}")
            break
    rows = np.flatnonzero(nonempty)
    return ReducedProblem(
        columns=kept,
        rows=rows,
        matrix=sub[rows],
        rhs=reduced_rhs[rows],
        relations=[relations[i] for i in rows],
        cost=cost[kept],
        lower=lower[kept],
        upper=upper[kept],
        fixed_values=fixed_values,
        objective_offset=offset,
        infeasible_row=infeasible_row,
    )
