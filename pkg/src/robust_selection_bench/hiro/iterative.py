"""Iterative hardening of discrete scenario sets.

Candidates start with the robust optimum of the input. Each round a master
picks perturbed costs that make the best candidate as expensive as possible,
the perturbed instance is solved exactly and its optimum joins the pool. The
loop stops when the master objective equals the new robust value, after
``max_iterations`` rounds or at the time limit. The instance returned is the
one with the largest exact robust optimum seen, ties going to the later one.
"""

import logging
import time
from fractions import Fraction
from typing import Optional, Tuple

from robust_selection_bench.core import evaluate_robust
from robust_selection_bench.errors import HiroError
from robust_selection_bench.formulations import solve_robust
from robust_selection_bench.io import instance_hash
from robust_selection_bench.milp import solve_milp
from robust_selection_bench.schemas import (
    HiroConfig,
    HiroIteration,
    HiroLineage,
    HiroTrace,
    ProblemInstance,
    SelectionSolution,
    SolveStatus,
    SolverConfig,
)

from .masters import build_master, resolve_mode

logger = logging.getLogger(__name__)

FLOAT_TOLERANCE = 1e-6


class Clock:
    """Remaining wall time of a run."""

    def __init__(self, limit: Optional[float]):
        self.start = time.monotonic()
        self.deadline = None if limit is None else self.start + limit

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start

    def remaining(self) -> Optional[float]:
        if self.deadline is None:
            return None
        return max(0.0, self.deadline - time.monotonic())

    def expired(self) -> bool:
        remaining = self.remaining()
        return remaining is not None and remaining <= 0

    def solver_cfg(self, cfg: SolverConfig) -> SolverConfig:
        """Solver config whose time limit does not run past the deadline."""
        remaining = self.remaining()
        if remaining is None:
            return cfg
        limit = remaining if cfg.time_limit is None else min(cfg.time_limit, remaining)
        return cfg.model_copy(update={"time_limit": limit})


def robust_optimum(
    inst: ProblemInstance, cfg: Optional[SolverConfig] = None
) -> Optional[Tuple[SelectionSolution, Fraction]]:
    """Proven robust optimum with its exact value, or None when the solve stopped early."""
    solution, result, _ = solve_robust(inst, cfg)
    if result.status != SolveStatus.OPTIMAL or solution is None:
        logger.debug(f"Robust solve of {inst.pairing.value} ended with {result.status.value}")
        return None
    return solution, evaluate_robust(solution, inst).objective


def objectives_match(master_objective: Fraction, value: Fraction, exact: bool) -> bool:
    if exact:
        return master_objective == value
    return float(master_objective) - float(value) <= FLOAT_TOLERANCE * max(1.0, abs(float(value)))


def with_lineage(
    hardened: ProblemInstance, parent: ProblemInstance, cfg: HiroConfig, mode: str, iterations: int, **extra
) -> ProblemInstance:
    """Copy of a hardened instance whose provenance records where it came from."""
    lineage = HiroLineage(
        parent_hash=instance_hash(parent),
        b=cfg.b,
        mode=mode,
        iterations=iterations,
        **extra,
    )
    provenance = parent.provenance.model_copy(update={"hiro": lineage})
    return hardened.replace(provenance=provenance)


def harden_iterative(inst: ProblemInstance, cfg: HiroConfig) -> Tuple[ProblemInstance, HiroTrace]:
    """Harden a discrete-scenario instance with the master/sub loop.

    Args:
        inst: MinMax, MinMaxRegret, TwoStage or Recoverable instance with discrete scenarios
        cfg: Budget, cost cap, limits and mode (FirstStageOnly or FirstAndSecondStage
            for TwoStage/Recoverable)

    Returns:
        The hardened instance and the trace of the run

    Raises:
        HiroError: If the pairing or mode does not apply, or a master is infeasible
    """
    mode = resolve_mode(inst, cfg.mode)
    clock = Clock(cfg.time_limit)

    solution, result, _ = solve_robust(inst, clock.solver_cfg(cfg.solver_cfg))
    if result.status != SolveStatus.OPTIMAL or solution is None:
        # Best known upper bound on the input optimum, or 0 without an incumbent.
        bound = evaluate_robust(solution, inst).objective if solution is not None else Fraction(0)
        logger.warning(
            f"Robust optimum of the input not proven within the limits ({result.status.value}); returning the input"
        )
        return inst, HiroTrace(hardened=inst, best_value=bound, input_value=bound, converged=False)
    candidate = solution
    input_value = evaluate_robust(solution, inst).objective

    if cfg.b == 0:
        logger.info("b = 0: the neighborhood is a singleton, nothing to harden")
        return inst, HiroTrace(
            hardened=inst, best_value=input_value, input_value=input_value, converged=True, candidates=(candidate,)
        )

    candidates = [candidate]
    iterations = []
    best, best_value = inst, input_value
    best_round = 0
    converged = False
    previous_master = None

    for round_number in range(1, cfg.max_iterations + 1):
        if clock.expired():
            logger.info(f"Time limit reached after {round_number - 1} rounds")
            break
        master = build_master(inst, candidates, cfg, mode)
        result = solve_milp(master.model, clock.solver_cfg(cfg.solver_cfg))
        if result.status == SolveStatus.INFEASIBLE:
            raise HiroError(f"{master.model.name} is infeasible although the input lies in its neighborhood")
        if not result.has_solution:
            logger.info(f"Master stopped with {result.status.value}; ending the loop")
            break
        exact_master = result.status == SolveStatus.OPTIMAL and result.exact_objective is not None
        master_objective = result.best_objective()
        if previous_master is not None and master_objective > previous_master:
            logger.warning(
                f"Master objective rose from {float(previous_master):.6f} to {float(master_objective):.6f}"
            )
        previous_master = master_objective

        perturbed = master.perturbed_instance(result)
        solved = robust_optimum(perturbed, clock.solver_cfg(cfg.solver_cfg))
        if solved is None:
            logger.info(f"Round {round_number}: robust solve not finished; ending the loop")
            break
        solution, value = solved
        iterations.append(
            HiroIteration(
                candidate_count=len(candidates),
                master_objective=float(master_objective),
                robust_value=value,
                elapsed=clock.elapsed,
                candidate=solution,
            )
        )
        logger.info(
            f"Round {round_number}: K={len(candidates)}, master {float(master_objective):.6f}, "
            f"robust value {float(value):.6f}"
        )
        if value >= best_value:
            best, best_value, best_round = perturbed, value, round_number

        if result.status == SolveStatus.OPTIMAL and objectives_match(master_objective, value, exact_master):
            converged = True
            break
        if solution in candidates:
            logger.warning(f"Round {round_number}: candidate repeated without convergence; stopping")
            break
        candidates.append(solution)

    if best is inst:
        if iterations:
            logger.warning("No perturbed instance beat the input; returning the input")
        hardened = inst
    else:
        hardened = with_lineage(best, inst, cfg, mode.value, best_round)

    trace = HiroTrace(
        iterations=tuple(iterations),
        hardened=hardened,
        best_value=best_value,
        input_value=input_value,
        converged=converged,
        candidates=tuple(candidates),
    )
    return hardened, trace
