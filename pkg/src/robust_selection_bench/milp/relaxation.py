"""LP relaxations of a MilpModel and the public ``solve_lp`` entry point."""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Mapping, Optional

import numpy as np

from robust_selection_bench.schemas import SolveResult, SolveStatus, SolverConfig

from .certificate import certify_basis
from .model import MilpModel, Relation, Sense, check_model
from .presolve import ReducedProblem, presolve
from .simplex import SimplexOutcome, SimplexStatus, StandardForm, TableauSimplex, build_standard_form, recover_values

logger = logging.getLogger(__name__)

INF = float("inf")

# Rational elimination cost grows with the cube of the row count.
EXACT_MAX_ROWS = 400

_STATUS = {
    SimplexStatus.INFEASIBLE: SolveStatus.INFEASIBLE,
    SimplexStatus.UNBOUNDED: SolveStatus.UNBOUNDED,
    SimplexStatus.TIME_LIMIT: SolveStatus.LIMIT_NO_SOLUTION,
    SimplexStatus.ITERATION_LIMIT: SolveStatus.NUMERICAL_ERROR,
}


@dataclass
class RelaxationOutcome:
    """One LP solve, values indexed like ``model.variables`` and ``model.constraints``."""

    status: SolveStatus
    values: Optional[np.ndarray] = None
    objective: Optional[float] = None
    duals: Optional[np.ndarray] = None
    iterations: int = 0
    exact_values: Optional[List[Fraction]] = None
    exact_objective: Optional[Fraction] = None
    exact_duals: Optional[List[Fraction]] = None

    @property
    def certified(self) -> bool:
        return self.exact_values is not None


class LinearRelaxation:
    """Dense data of a model, ready for repeated LP solves under varying fixings.

    Fixings map column indices to values and override the model bounds; the
    branch-and-bound uses them to fix binaries.
    """

    def __init__(self, model: MilpModel, cfg: SolverConfig):
        self.model = model
        self.cfg = cfg
        m, n = len(model.constraints), len(model.variables)
        self.sign = -1 if model.objective.sense == Sense.MAX else 1
        self.matrix = np.zeros((m, n))
        for i, con in enumerate(model.constraints):
            for j, coef in con.coefficients:
                self.matrix[i, j] = float(coef)
        self.rhs = np.array([float(con.rhs) for con in model.constraints], dtype=float)
        self.relations = [con.relation for con in model.constraints]
        self.objective = np.zeros(n)
        for j, coef in model.objective.coefficients:
            self.objective[j] = float(coef)
        self.lower = np.array([-INF if v.lower is None else float(v.lower) for v in model.variables], dtype=float)
        self.upper = np.array([INF if v.upper is None else float(v.upper) for v in model.variables], dtype=float)

    @cached_property
    def exact_data(self):
        """Object-array (Fraction) copies of matrix, rhs, objective and bounds."""
        m, n = self.matrix.shape
        matrix = np.full((m, n), Fraction(0), dtype=object)
        for i, con in enumerate(self.model.constraints):
            for j, coef in con.coefficients:
                matrix[i, j] = coef
        rhs = np.array([con.rhs for con in self.model.constraints], dtype=object)
        objective = np.full(n, Fraction(0), dtype=object)
        for j, coef in self.model.objective.coefficients:
            objective[j] = coef
        lower = np.array([-INF if v.lower is None else v.lower for v in self.model.variables], dtype=object)
        upper = np.array([INF if v.upper is None else v.upper for v in self.model.variables], dtype=object)
        return matrix, rhs, objective, lower, upper

    @property
    def exact_check_allowed(self) -> bool:
        return (
            self.model.nonzeros <= self.cfg.exact_check_max_nonzeros
            and len(self.model.constraints) <= EXACT_MAX_ROWS
        )

    def _reduce(self, fixings: Mapping[int, int], exact: bool) -> ReducedProblem:
        if exact:
            matrix, rhs, objective, lower, upper = self.exact_data
            lower, upper = lower.copy(), upper.copy()
            for j, value in fixings.items():
                lower[j] = upper[j] = Fraction(value)
            cost = objective * self.sign
            tol = 0
        else:
            matrix, rhs, objective = self.matrix, self.rhs, self.objective
            lower, upper = self.lower.copy(), self.upper.copy()
            for j, value in fixings.items():
                lower[j] = upper[j] = float(value)
            cost = objective * self.sign
            tol = self.cfg.feasibility_tol
        return presolve(matrix, rhs, self.relations, cost, lower, upper, tol)

    def solve(
        self,
        fixings: Optional[Mapping[int, int]] = None,
        deadline: Optional[float] = None,
        certify: Optional[bool] = None,
    ) -> RelaxationOutcome:
        """Solve the relaxation; optionally certify the optimum in rational arithmetic.

        A certificate failure triggers an exact re-solve with Bland's rule; if
        that fails too the outcome is NumericalError.
        """
        fixings = fixings or {}
        certify = self.cfg.exact_check if certify is None else certify
        problem = self._reduce(fixings, exact=False)
        if problem.infeasible:
            return RelaxationOutcome(SolveStatus.INFEASIBLE)
        form = build_standard_form(problem)
        simplex = TableauSimplex(form, self.cfg.feasibility_tol, self.cfg.stall_threshold, deadline)
        outcome = simplex.solve()

        if outcome.status == SimplexStatus.ITERATION_LIMIT and self.exact_check_allowed:
            logger.warning(f"Simplex iteration limit on {self.model.name}; retrying in exact arithmetic")
            return self._exact_resolve(fixings, deadline, outcome.iterations)
        if outcome.status != SimplexStatus.OPTIMAL:
            return RelaxationOutcome(_STATUS[outcome.status], iterations=outcome.iterations)

        result = self._float_outcome(problem, form, outcome)
        if not (certify and self.exact_check_allowed):
            return result
        exact_problem = self._reduce(fixings, exact=True)
        exact_form = build_standard_form(exact_problem, row_sign=form.row_sign)
        checked = certify_basis(exact_form, outcome.basis, outcome.at_upper)
        if checked is not None:
            values, duals = checked
            return self._attach_exact(result, exact_problem, exact_form, values, duals)
        logger.warning(f"Exact check rejected the optimal basis of {self.model.name}; re-solving exactly")
        return self._exact_resolve(fixings, deadline, outcome.iterations)

    def _full_values(self, problem: ReducedProblem, form: StandardForm, std_values) -> np.ndarray:
        values = problem.fixed_values.copy()
        values[problem.columns] = recover_values(form, std_values)
        return values

    def _full_duals(self, problem: ReducedProblem, form: StandardForm, std_duals, exact: bool) -> np.ndarray:
        duals = np.array([Fraction(0)] * len(self.relations), dtype=object) if exact else np.zeros(len(self.relations))
        if len(problem.rows):
            signs = form.row_sign.astype(object) if exact else form.row_sign.astype(float)
            duals[problem.rows] = std_duals * signs * self.sign
        return duals

    def _float_outcome(self, problem: ReducedProblem, form: StandardForm, outcome: SimplexOutcome) -> RelaxationOutcome:
        values = self._full_values(problem, form, outcome.values)
        objective = float(self.objective @ values) + float(self.model.objective.constant)
        return RelaxationOutcome(
            status=SolveStatus.OPTIMAL,
            values=values,
            objective=objective,
            duals=self._full_duals(problem, form, outcome.duals, exact=False),
            iterations=outcome.iterations,
        )

    def _attach_exact(self, result, problem, form, std_values, std_duals) -> RelaxationOutcome:
        values = self._full_values(problem, form, std_values)
        duals = self._full_duals(problem, form, std_duals, exact=True)
        objective = self.exact_data[2] @ values + self.model.objective.constant
        result.exact_values = [Fraction(v) for v in values]
        result.exact_duals = [Fraction(v) for v in duals]
        result.exact_objective = Fraction(objective)
        result.values = np.array([float(v) for v in values])
        result.duals = np.array([float(v) for v in duals])
        result.objective = float(result.exact_objective)
        return result

    def _exact_resolve(self, fixings, deadline, iterations: int) -> RelaxationOutcome:
        problem = self._reduce(fixings, exact=True)
        if problem.infeasible:
            return RelaxationOutcome(SolveStatus.INFEASIBLE, iterations=iterations)
        form = build_standard_form(problem)
        outcome = TableauSimplex(form, 0, stall_threshold=0, deadline=deadline).solve()
        iterations += outcome.iterations
        if outcome.status == SimplexStatus.OPTIMAL:
            result = RelaxationOutcome(SolveStatus.OPTIMAL, iterations=iterations)
            return self._attach_exact(result, problem, form, outcome.values, outcome.duals)
        if outcome.status in (SimplexStatus.INFEASIBLE, SimplexStatus.UNBOUNDED):
            return RelaxationOutcome(_STATUS[outcome.status], iterations=iterations)
        logger.error(f"Exact re-solve of {self.model.name} ended with {outcome.status.value}")
        return RelaxationOutcome(SolveStatus.NUMERICAL_ERROR, iterations=iterations)

    def violations(self, values: np.ndarray, integral: bool = False) -> List[str]:
        """Rows, bounds and (optionally) integrality violated beyond tolerance."""
        tol = self.cfg.feasibility_tol
        found: List[str] = []
        activity = self.matrix @ values
        for i, con in enumerate(self.model.constraints):
            slack_tol = tol * max(1.0, abs(self.rhs[i]))
            gap = activity[i] - self.rhs[i]
            if (
                (con.relation == Relation.LE and gap > slack_tol)
                or (con.relation == Relation.GE and gap < -slack_tol)
                or (con.relation == Relation.EQ and abs(gap) > slack_tol)
            ):
                found.append(f"row {con.name} violated by {gap:.3g}")
        for j, var in enumerate(self.model.variables):
            if values[j] < self.lower[j] - tol or values[j] > self.upper[j] + tol:
                found.append(f"{var.name}={values[j]:.6g} outside its bounds")
            if integral and var.is_binary and min(abs(values[j]), abs(1 - values[j])) > self.cfg.integrality_tol:
                found.append(f"binary {var.name}={values[j]:.6g} is fractional")
        return found


def to_solve_result(
    model: MilpModel,
    outcome: RelaxationOutcome,
    status: SolveStatus,
    start: float,
    best_bound: Optional[float] = None,
    node_count: int = 0,
    lp_iterations: Optional[int] = None,
) -> SolveResult:
    """Package an outcome, keyed by variable and constraint names."""
    names = [var.name for var in model.variables]
    rows = [con.name for con in model.constraints]
    has_values = outcome.values is not None
    return SolveResult(
        status=status,
        objective=outcome.objective if has_values else None,
        exact_objective=outcome.exact_objective,
        assignment={name: float(v) for name, v in zip(names, outcome.values)} if has_values else None,
        exact_assignment=dict(zip(names, outcome.exact_values)) if outcome.certified else None,
        duals={name: float(v) for name, v in zip(rows, outcome.duals)} if outcome.duals is not None else None,
        exact_duals=dict(zip(rows, outcome.exact_duals)) if outcome.exact_duals is not None else None,
        best_bound=best_bound if best_bound is not None else (outcome.objective if has_values else None),
        node_count=node_count,
        lp_iterations=outcome.iterations if lp_iterations is None else lp_iterations,
        wall_time=time.monotonic() - start,
        certified=outcome.certified,
    )


def solve_lp(model: MilpModel, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Solve the LP relaxation of a model (binaries relaxed to [0, 1]).

    Args:
        model: A well-formed model
        cfg: Tolerances and limits; defaults to SolverConfig()

    Returns:
        SolveResult with primal values and row duals (objective change per unit
        of right-hand side); exact values when the optimum was certified

    Raises:
        ModelDefectError: If validate_model reports defects
    """
    cfg = cfg or SolverConfig()
    check_model(model)
    start = time.monotonic()
    deadline = start + cfg.time_limit if cfg.time_limit is not None else None
    relaxation = LinearRelaxation(model, cfg)
    outcome = relaxation.solve(deadline=deadline)
    status = outcome.status
    if status == SolveStatus.OPTIMAL:
        defects = relaxation.violations(outcome.values)
        if defects:
            logger.warning(f"LP solution of {model.name} failed re-verification: {defects[:3]}")
            status = SolveStatus.NUMERICAL_ERROR
    logger.debug(f"solve_lp {model.name}: {status.value}, objective={outcome.objective}")
    return to_solve_result(model, outcome, status, start)
