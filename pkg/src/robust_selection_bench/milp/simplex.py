"""Dense bounded-variable primal simplex.

The tableau code is generic over the array dtype: float64 with tolerances for
the working solve, object arrays of Fractions with zero tolerances for the
exact re-solve.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .model import Relation
from .presolve import ReducedProblem

logger = logging.getLogger(__name__)

INF = float("inf")
PIVOT_TOL = 1e-9


class ColumnKind(str, Enum):
    STRUCTURAL = "structural"
    SLACK = "slack"
    ARTIFICIAL = "artificial"


@dataclass
class StandardForm:
    """min cost·x  s.t.  matrix x = rhs,  0 <= x <= upper  (rhs >= 0 when built fresh)."""

    matrix: np.ndarray
    rhs: np.ndarray
    cost: np.ndarray
    upper: np.ndarray
    has_upper: np.ndarray
    kinds: List[ColumnKind]
    origin: List[Tuple[int, int]]
    shift: np.ndarray
    row_sign: np.ndarray
    initial_basis: np.ndarray
    exact: bool

    @property
    def artificial(self) -> np.ndarray:
        return np.array([kind == ColumnKind.ARTIFICIAL for kind in self.kinds], dtype=bool)


def build_standard_form(problem: ReducedProblem, row_sign: Optional[np.ndarray] = None) -> StandardForm:
    """Bring a reduced problem to standard form.

    Finite lower bounds are shifted to zero, columns bounded only above are
    negated and free columns split. Each row gets a slack (≤, ≥), rows with a
    negative right-hand side are negated, and rows without a +1 slack receive
    an artificial column for the starting basis. ``row_sign`` reuses the
    negation pattern of an earlier build.
    """
    exact = problem.matrix.dtype == object
    zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)
    m, n = problem.matrix.shape

    columns = []
    cost = []
    upper = []
    has_upper = []
    kinds: List[ColumnKind] = []
    origin: List[Tuple[int, int]] = []
    shift = np.zeros(n, dtype=object if exact else float)
    rhs = problem.rhs.copy()

    for k in range(n):
        column = problem.matrix[:, k]
        low, high = problem.lower[k], problem.upper[k]
        if low > -INF:
            shift[k] = low
            rhs = rhs - column * low
            columns.append(column)
            cost.append(problem.cost[k])
            bounded = high < INF
            upper.append(high - low if bounded else INF)
            has_upper.append(bounded)
            origin.append((k, 1))
            kinds.append(ColumnKind.STRUCTURAL)
        elif high < INF:
            shift[k] = high
            rhs = rhs - column * high
            columns.append(-column)
            cost.append(-problem.cost[k])
            upper.append(INF)
            has_upper.append(False)
            origin.append((k, -1))
            kinds.append(ColumnKind.STRUCTURAL)
        else:
            for sign in (1, -1):
                columns.append(column * sign)
                cost.append(problem.cost[k] * sign)
                upper.append(INF)
                has_upper.append(False)
                origin.append((k, sign))
                kinds.append(ColumnKind.STRUCTURAL)

    if row_sign is None:
        row_sign = np.where(rhs < 0, -1, 1)
    slack_rows = {}
    for i, relation in enumerate(problem.relations):
        if relation == Relation.EQ:
            continue
        column = np.full(m, zero, dtype=object) if exact else np.zeros(m)
        column[i] = one if relation == Relation.LE else -one
        slack_rows[i] = len(columns)
        columns.append(column)
        cost.append(zero)
        upper.append(INF)
        has_upper.append(False)
        origin.append((i, 0))
        kinds.append(ColumnKind.SLACK)

    signs = row_sign.astype(object) if exact else row_sign.astype(float)
    matrix = (
        np.column_stack(columns) if columns else np.zeros((m, 0), dtype=object if exact else float)
    )
    matrix = matrix * signs[:, None]
    rhs = rhs * signs

    basis = []
    artificial_columns = []
    for i in range(m):
        j = slack_rows.get(i)
        if j is not None and matrix[i, j] == 1:
            basis.append(j)
            continue
        column = np.full(m, zero, dtype=object) if exact else np.zeros(m)
        column[i] = one
        basis.append(matrix.shape[1] + len(artificial_columns))
        artificial_columns.append(column)
        cost.append(zero)
        upper.append(INF)
        has_upper.append(False)
        origin.append((i, 0))
        kinds.append(ColumnKind.ARTIFICIAL)
    if artificial_columns:
        matrix = np.column_stack([matrix] + artificial_columns)

    dtype = object if exact else float
    return StandardForm(
        matrix=matrix,
        rhs=rhs,
        cost=np.array(cost, dtype=dtype),
        upper=np.array(upper, dtype=dtype),
        has_upper=np.array(has_upper, dtype=bool),
        kinds=kinds,
        origin=origin,
        shift=shift,
        row_sign=row_sign,
        initial_basis=np.array(basis, dtype=int),
        exact=exact,
    )


class SimplexStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    TIME_LIMIT = "time_limit"
    ITERATION_LIMIT = "iteration_limit"


@dataclass
class SimplexOutcome:
    status: SimplexStatus
    basis: np.ndarray
    at_upper: np.ndarray
    values: Optional[np.ndarray] = None
    duals: Optional[np.ndarray] = None
    objective: Optional[object] = None
    iterations: int = 0


class TableauSimplex:
    """Two-phase bounded-variable primal simplex on a dense tableau.

    Dantzig pricing picks the entering column; after ``stall_threshold``
    consecutive degenerate pivots Bland's rule takes over until progress
    resumes. Ratio-test ties go to the lowest basic column index.
    """

    def __init__(
        self,
        form: StandardForm,
        feasibility_tol: float = 1e-7,
        stall_threshold: int = 1000,
        deadline: Optional[float] = None,
        max_iterations: Optional[int] = None,
    ):
        self.form = form
        self.exact = form.exact
        self.tol = 0 if self.exact else feasibility_tol
        self.pivot_tol = 0 if self.exact else PIVOT_TOL
        self.stall_threshold = stall_threshold
        self.deadline = deadline
        m, width = form.matrix.shape
        self.max_iterations = max_iterations or 50 * (m + width) + 1000
        self.tableau = form.matrix.copy()
        self.values = form.rhs.copy()
        self.upper = form.upper.copy()
        self.has_upper = form.has_upper.copy()
        self.basis = form.initial_basis.copy()
        self.at_upper = np.zeros(width, dtype=bool)
        self.iterations = 0

    def _nonbasic_value(self, j: int):
        return self.upper[j] if self.at_upper[j] else (Fraction(0) if self.exact else 0.0)

    def _pivot(self, row: int, col: int) -> None:
        pivot_row = self.tableau[row] / self.tableau[row, col]
        column = self.tableau[:, col].copy()
        self.tableau -= np.multiply.outer(column, pivot_row)
        self.tableau[row] = pivot_row

    def _iterate(self, cost: np.ndarray) -> SimplexStatus:
        tableau = self.tableau
        width = tableau.shape[1]
        movable = ~(self.has_upper & (self.upper == 0))
        degenerate_run = 0
        while True:
            if self.iterations >= self.max_iterations:
                return SimplexStatus.ITERATION_LIMIT
            if self.deadline is not None and time.monotonic() > self.deadline:
                return SimplexStatus.TIME_LIMIT

            reduced = cost - cost[self.basis] @ self.tableau
            nonbasic = np.ones(width, dtype=bool)
            nonbasic[self.basis] = False
            eligible = nonbasic & movable & (
                (~self.at_upper & (reduced < -self.tol)) | (self.at_upper & (reduced > self.tol))
            )
            if not eligible.any():
                return SimplexStatus.OPTIMAL
            if degenerate_run >= self.stall_threshold:
                entering = int(np.flatnonzero(eligible)[0])
            else:
                scores = np.where(eligible, np.abs(reduced), 0)
                entering = int(np.argmax(scores.astype(float)))

            direction = -1 if self.at_upper[entering] else 1
            column = self.tableau[:, entering] * direction
            step = self.upper[entering] if self.has_upper[entering] else INF
            leaving = -1
            basic_upper = self.upper[self.basis]
            basic_has_upper = self.has_upper[self.basis]
            for r in range(len(self.basis)):
                alpha = column[r]
                if alpha > self.pivot_tol:
                    ratio = self.values[r] / alpha
                elif alpha < -self.pivot_tol and basic_has_upper[r]:
                    ratio = (basic_upper[r] - self.values[r]) / -alpha
                else:
                    continue
                if ratio < 0:
                    ratio = 0 * ratio
                if ratio < step or (ratio == step and leaving >= 0 and self.basis[r] < self.basis[leaving]):
                    step, leaving = ratio, r

            if leaving < 0 and step == INF:
                return SimplexStatus.UNBOUNDED

            degenerate_run = degenerate_run + 1 if step <= self.tol else 0
            self.values = self.values - column * step
            if leaving < 0:
                self.at_upper[entering] = not self.at_upper[entering]
            else:
                exiting = self.basis[leaving]
                self.at_upper[exiting] = bool(column[leaving] < 0)
                entering_value = self._nonbasic_value(entering) + direction * step
                self._pivot(leaving, entering)
                self.values[leaving] = entering_value
                self.basis[leaving] = entering
                self.at_upper[entering] = False
            self.iterations += 1

    def _drive_out_artificials(self, artificial: np.ndarray) -> None:
        for r in range(len(self.basis)):
            if not artificial[self.basis[r]]:
                continue
            row = self.tableau[r]
            in_basis = set(self.basis.tolist())
            candidates = [
                j for j in np.flatnonzero(~artificial & (np.abs(row) > self.pivot_tol).astype(bool))
                if j not in in_basis
            ]
            if not candidates:
                # Redundant row; the artificial stays basic at zero.
                continue
            magnitudes = [abs(row[j]) for j in candidates]
            entering = int(candidates[int(np.argmax(np.array(magnitudes, dtype=float)))])
            value = self._nonbasic_value(entering)
            self._pivot(r, entering)
            self.values[r] = value
            self.basis[r] = entering
            self.at_upper[entering] = False

    def solve(self) -> SimplexOutcome:
        form = self.form
        artificial = form.artificial
        if artificial.any():
            if self.exact:
                phase_one = np.array([Fraction(int(a)) for a in artificial], dtype=object)
            else:
                phase_one = artificial.astype(float)
            status = self._iterate(phase_one)
            if status != SimplexStatus.OPTIMAL:
                return self._outcome(status)
            infeasibility = sum(self.values[r] for r in range(len(self.basis)) if artificial[self.basis[r]])
            scale = 1.0 if self.exact else max(1.0, float(np.max(np.abs(form.rhs))) if len(form.rhs) else 1.0)
            if infeasibility > self.tol * scale:
                logger.debug(f"Phase one ended with infeasibility {float(infeasibility):.3g}")
                return self._outcome(SimplexStatus.INFEASIBLE)
            self._drive_out_artificials(artificial)
            self.upper[artificial] = 0
            self.has_upper[artificial] = True

        status = self._iterate(form.cost)
        if status != SimplexStatus.OPTIMAL:
            return self._outcome(status)
        return self._outcome(status, final=True)

    def _outcome(self, status: SimplexStatus, final: bool = False) -> SimplexOutcome:
        outcome = SimplexOutcome(
            status=status, basis=self.basis.copy(), at_upper=self.at_upper.copy(), iterations=self.iterations
        )
        if not final:
            return outcome
        width = self.tableau.shape[1]
        values = np.array([self._nonbasic_value(j) for j in range(width)], dtype=self.tableau.dtype)
        values[self.basis] = self.values
        cost = self.form.cost
        outcome.values = values
        outcome.objective = cost @ values
        outcome.duals = cost[self.basis] @ self.tableau[:, self.form.initial_basis]
        return outcome


def recover_values(form: StandardForm, values: np.ndarray) -> np.ndarray:
    """Map standard-form column values back to the reduced problem's columns."""
    result = form.shift.copy()
    for j, (k, sign) in enumerate(form.origin):
        if form.kinds[j] == ColumnKind.STRUCTURAL:
            result[k] = result[k] + sign * values[j]
    return result
