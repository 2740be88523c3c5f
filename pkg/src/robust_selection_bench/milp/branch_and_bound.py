"""0-1 branch-and-bound over LP relaxations.

Search dives depth-first into the child matching the rounded branching value
and, when a dive ends, resumes from the open node with the best bound. There is
no primal heuristic and no cutting plane, so node counts stay comparable
between runs.
"""

import heapq
import logging
import time
from typing import Dict, List, Optional, Tuple

import numpy as np

from robust_selection_bench.schemas import BranchingRule, SolveResult, SolveStatus, SolverConfig

from .model import MilpModel, check_model
from .relaxation import LinearRelaxation, RelaxationOutcome, solve_lp, to_solve_result

logger = logging.getLogger(__name__)

INF = float("inf")

Fixings = Dict[int, int]


class BranchAndBound:
    """One branch-and-bound run; all state is private to the run."""

    def __init__(self, model: MilpModel, cfg: SolverConfig):
        self.model = model
        self.cfg = cfg
        self.relaxation = LinearRelaxation(model, cfg)
        self.sign = self.relaxation.sign
        self.binaries = np.array(model.binaries, dtype=int)
        self.nodes = 0
        self.lp_iterations = 0
        self.incumbent: Optional[RelaxationOutcome] = None
        self.incumbent_bound = INF
        self.open: List[Tuple[float, int, Fixings]] = []
        self._sequence = 0

    def _push(self, bound: float, fixings: Fixings) -> None:
        heapq.heappush(self.open, (bound, self._sequence, fixings))
        self._sequence += 1

    def _prunable(self, bound: float) -> bool:
        if self.incumbent is None:
            return False
        return bound >= self.incumbent_bound - 1e-9 * max(1.0, abs(self.incumbent_bound))

    def branching_variable(self, values: np.ndarray) -> Optional[int]:
        """Column to branch on, or None when every binary is integral."""
        binary_values = values[self.binaries]
        fractionality = np.abs(binary_values - np.round(binary_values))
        fractional = fractionality > self.cfg.integrality_tol
        if not fractional.any():
            return None
        if self.cfg.branching == BranchingRule.FIRST_FRACTIONAL:
            position = int(np.flatnonzero(fractional)[0])
        else:
            position = int(np.argmax(np.where(fractional, np.minimum(binary_values, 1 - binary_values), -1.0)))
        return int(self.binaries[position])

    def _next_open(self) -> Optional[Tuple[float, Fixings]]:
        while self.open:
            bound, _, fixings = heapq.heappop(self.open)
            if not self._prunable(bound):
                return bound, fixings
        return None

    def run(self, start: float) -> SolveResult:
        deadline = start + self.cfg.time_limit if self.cfg.time_limit is not None else None
        current: Optional[Fixings] = {}
        current_bound = -INF
        limit: Optional[SolveStatus] = None

        while True:
            if current is None:
                resumed = self._next_open()
                if resumed is None:
                    break
                current_bound, current = resumed
            if self.cfg.node_limit is not None and self.nodes >= self.cfg.node_limit:
                limit = SolveStatus.FEASIBLE_NODE_LIMIT
            elif deadline is not None and time.monotonic() > deadline:
                limit = SolveStatus.FEASIBLE_TIME_LIMIT
            if limit is not None:
                self._push(current_bound, current)
                break

            self.nodes += 1
            outcome = self.relaxation.solve(current, deadline=deadline, certify=False)
            self.lp_iterations += outcome.iterations
            if outcome.status == SolveStatus.LIMIT_NO_SOLUTION:
                self._push(current_bound, current)
                limit = SolveStatus.FEASIBLE_TIME_LIMIT
                break
            if outcome.status in (SolveStatus.NUMERICAL_ERROR, SolveStatus.UNBOUNDED):
                logger.warning(f"Node LP of {self.model.name} ended with {outcome.status.value}")
                return to_solve_result(
                    self.model, RelaxationOutcome(outcome.status), outcome.status, start,
                    node_count=self.nodes, lp_iterations=self.lp_iterations,
                )
            if outcome.status == SolveStatus.INFEASIBLE:
                current = None
                continue

            bound = self.sign * outcome.objective
            if self._prunable(bound):
                current = None
                continue
            j = self.branching_variable(outcome.values)
            if j is None:
                self.incumbent, self.incumbent_bound = outcome, bound
                logger.debug(f"New incumbent {outcome.objective:.6g} at node {self.nodes}")
                current = None
                continue
            first = 1 if outcome.values[j] >= 0.5 else 0
            self._push(bound, {**current, j: 1 - first})
            current, current_bound = {**current, j: first}, bound

        return self._finish(start, limit)

    def _finish(self, start: float, limit: Optional[SolveStatus]) -> SolveResult:
        open_bounds = [bound for bound, _, _ in self.open]
        if self.incumbent is None:
            status = SolveStatus.INFEASIBLE if limit is None else SolveStatus.LIMIT_NO_SOLUTION
            best = min(open_bounds) if open_bounds else None
            logger.info(f"solve_milp {self.model.name}: {status.value} after {self.nodes} nodes")
            return to_solve_result(
                self.model, RelaxationOutcome(status), status, start,
                best_bound=None if best is None else self.sign * best,
                node_count=self.nodes, lp_iterations=self.lp_iterations,
            )

        best_bound = min(open_bounds + [self.incumbent_bound]) if limit is not None else self.incumbent_bound
        fixings = {int(j): int(round(self.incumbent.values[j])) for j in self.binaries}
        polished = self.relaxation.solve(fixings, certify=self.cfg.exact_check)
        final = self.incumbent
        if polished.status == SolveStatus.OPTIMAL:
            final = polished
        else:
            logger.warning(f"Re-solve with fixed binaries of {self.model.name} returned {polished.status.value}")

        status = limit or SolveStatus.OPTIMAL
        defects = self.relaxation.violations(final.values, integral=True)
        if defects:
            logger.warning(f"Incumbent of {self.model.name} failed re-verification: {defects[:3]}")
            status = SolveStatus.NUMERICAL_ERROR
        logger.info(
            f"solve_milp {self.model.name}: {status.value}, objective={final.objective:.6g}, "
            f"nodes={self.nodes}, lp_iterations={self.lp_iterations}"
        )
        return to_solve_result(
            self.model, final, status, start,
            best_bound=self.sign * best_bound,
            node_count=self.nodes, lp_iterations=self.lp_iterations,
        )


def solve_milp(model: MilpModel, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Solve a 0-1 mixed linear program.

    Args:
        model: A well-formed model
        cfg: Tolerances, limits and branching rule; defaults to SolverConfig()

    Returns:
        SolveResult; on a limit the best incumbent (if any) with the best open bound

    Raises:
        ModelDefectError: If validate_model reports defects
    """
    cfg = cfg or SolverConfig()
    check_model(model)
    if not model.binaries:
        return solve_lp(model, cfg)
    start = time.monotonic()
    return BranchAndBound(model, cfg).run(start)
