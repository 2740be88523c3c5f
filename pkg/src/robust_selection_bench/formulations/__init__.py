"""Compact MILP formulations for every supported pairing, plus enumeration solvers.

``build_milp`` picks the formulation by pairing; ``solve_robust`` builds,
solves and extracts the first-stage solution in one call.
"""

import logging
from typing import Callable, Dict, Optional, Tuple

from robust_selection_bench.errors import UnsupportedPairingError
from robust_selection_bench.milp import solve_milp
from robust_selection_bench.schemas import Pairing, ProblemInstance, SelectionSolution, SolveResult, SolverConfig

from .breakpoints import (
    BreakpointSet,
    minmax_budget_breakpoints,
    recoverable_breakpoints,
    regret_breakpoints,
    two_stage_breakpoints,
)
from .bundle import FormulationBuilder, ModelBundle, variable_name
from .enumeration import solve_minmax_budgeted_enumeration, solve_regret_interval_enumeration
from .minmax import build_minmax_budgeted, build_minmax_discrete, build_minmax_interval
from .recoverable import (
    build_recoverable_continuous_budgeted,
    build_recoverable_discrete,
    build_recoverable_discrete_budgeted,
)
from .regret import build_regret_discrete, build_regret_interval, scenario_optima
from .two_stage import (
    build_two_stage_continuous_budgeted,
    build_two_stage_discrete,
    build_two_stage_discrete_budgeted,
)

logger = logging.getLogger(__name__)

BUILDERS: Dict[Pairing, Callable[[ProblemInstance], ModelBundle]] = {
    Pairing.MINMAX_DISCRETE: build_minmax_discrete,
    Pairing.MINMAX_INTERVAL: build_minmax_interval,
    Pairing.MINMAX_BUDGETED: build_minmax_budgeted,
    Pairing.REGRET_INTERVAL: build_regret_interval,
    Pairing.REGRET_DISCRETE: build_regret_discrete,
    Pairing.TWO_STAGE_DISCRETE: build_two_stage_discrete,
    Pairing.TWO_STAGE_DISCRETE_BUDGETED: build_two_stage_discrete_budgeted,
    Pairing.TWO_STAGE_CONTINUOUS_BUDGETED: build_two_stage_continuous_budgeted,
    Pairing.RECOVERABLE_DISCRETE: build_recoverable_discrete,
    Pairing.RECOVERABLE_DISCRETE_BUDGETED: build_recoverable_discrete_budgeted,
    Pairing.RECOVERABLE_CONTINUOUS_BUDGETED: build_recoverable_continuous_budgeted,
}


def build_milp(inst: ProblemInstance) -> ModelBundle:
    """Formulation of an instance whose optimum is the robust optimum.

    Raises:
        UnsupportedPairingError: If no formulation exists for the pairing
        InstanceTooLargeError: If the pairing's formulation refuses the size
    """
    builder = BUILDERS.get(inst.pairing)
    if builder is None:
        raise UnsupportedPairingError(f"no formulation for pairing {inst.pairing.value}")
    bundle = builder(inst)
    logger.debug(
        f"build_milp {inst.pairing.value}: {len(bundle.model.variables)} variables, "
        f"{len(bundle.model.constraints)} constraints"
    )
    return bundle


def solve_robust(
    inst: ProblemInstance, cfg: Optional[SolverConfig] = None
) -> Tuple[Optional[SelectionSolution], SolveResult, ModelBundle]:
    """Build and solve; the solution is None when the solve produced no assignment."""
    bundle = build_milp(inst)
    cfg = cfg or SolverConfig()
    result = solve_milp(bundle.model, cfg)
    solution = bundle.extract(result, cfg.integrality_tol) if result.has_solution else None
    return solution, result, bundle


__all__ = [
    "BUILDERS",
    "BreakpointSet",
    "FormulationBuilder",
    "ModelBundle",
    "build_milp",
    "build_minmax_budgeted",
    "build_minmax_discrete",
    "build_minmax_interval",
    "build_recoverable_continuous_budgeted",
    "build_recoverable_discrete",
    "build_recoverable_discrete_budgeted",
    "build_regret_discrete",
    "build_regret_interval",
    "build_two_stage_continuous_budgeted",
    "build_two_stage_discrete",
    "build_two_stage_discrete_budgeted",
    "minmax_budget_breakpoints",
    "recoverable_breakpoints",
    "regret_breakpoints",
    "scenario_optima",
    "solve_minmax_budgeted_enumeration",
    "solve_regret_interval_enumeration",
    "solve_robust",
    "two_stage_breakpoints",
    "variable_name",
]
