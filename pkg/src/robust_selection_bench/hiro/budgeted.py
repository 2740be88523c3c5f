"""Single-shot hardening of MinMax × budgeted instances.

The robust value min_x max_c is written through the dual of the inner
maximization: one nominal-selection dual per candidate value of the budget
multiplier π. Maximizing the smallest of these over the perturbed vectors is
a single LP.

LowerBounds perturbs l with d fixed, so π runs over {0} ∪ d̃. Deviations and
Both perturb d; the items are then re-indexed so that d̃ is non-decreasing,
order rows keep d sorted, and block k takes π = d_k so that
[d_i − d_k]₊ is d_i − d_k for i > k and 0 otherwise. The re-indexing is
recorded in the lineage as the 0-based original index of every new position.
A deviation-sum budget only has the blocks π = 0 and π = 1, which are linear
in any mode, so nothing is re-indexed.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from robust_selection_bench.errors import HiroError, UnsupportedPairingError
from robust_selection_bench.formulations import (
    FormulationBuilder,
    minmax_budget_breakpoints,
    solve_minmax_budgeted_enumeration,
    variable_name,
)
from robust_selection_bench.milp import MilpModel, Relation, Sense, solve_lp
from robust_selection_bench.schemas import (
    BOX_MODES,
    BudgetMode,
    BudgetedSet,
    HiroConfig,
    HiroMode,
    Pairing,
    ProblemInstance,
    SolveStatus,
)

from .iterative import Clock, with_lineage
from .linear import Affine, add_selection_dual
from .masters import PerturbedVector, read_perturbed
from .neighborhood import PerturbationNeighborhood

logger = logging.getLogger(__name__)

DEFAULT_BUDGETED_MODE = HiroMode.LOWER_BOUNDS


def resolve_box_mode(mode: Optional[HiroMode], default: HiroMode) -> HiroMode:
    """Mode of a single-shot run over lower bounds and deviations.

    Raises:
        HiroError: If the mode perturbs something other than l or d
    """
    if mode is None:
        return default
    if mode not in BOX_MODES:
        allowed = ", ".join(m.value for m in BOX_MODES)
        raise HiroError(f"mode {mode.value} does not apply to box hardening (use {allowed})")
    return mode


def permute_items(inst: ProblemInstance, order: Sequence[int]) -> ProblemInstance:
    """Budgeted instance whose item ``k`` is item ``order[k]`` of the input."""
    u = inst.uncertainty
    uncertainty = u.model_copy(
        update={
            "lower": tuple(u.lower[i] for i in order),
            "deviation": tuple(u.deviation[i] for i in order),
        }
    )
    return inst.replace(uncertainty=uncertainty)


def _vector(
    builder: FormulationBuilder, symbol: str, values: Sequence[Fraction], perturb: bool, cfg: HiroConfig
) -> Tuple[List[Affine], Optional[PerturbedVector]]:
    if not perturb:
        return [Affine.const(v) for v in values], None
    hood = PerturbationNeighborhood.around(values, cfg.b, cfg.c_max)
    columns = hood.add_to(builder, symbol)
    return [Affine.column(j) for j in columns], PerturbedVector(columns, hood)


def build_budgeted_model(
    inst: ProblemInstance, cfg: HiroConfig, mode: HiroMode
) -> Tuple[MilpModel, Optional[PerturbedVector], Optional[PerturbedVector]]:
    """LP whose optimum is the largest robust value over the neighborhoods.

    Items must already be sorted by deviation when ``mode`` perturbs d under
    an item budget.

    Returns:
        The model with the perturbed lower-bound and deviation vectors (None
        when the mode keeps a vector fixed)
    """
    u = inst.uncertainty
    builder = FormulationBuilder("hiro_minmax_budgeted")
    lower, lower_vec = _vector(builder, "l", u.lower, mode in (HiroMode.LOWER_BOUNDS, HiroMode.BOTH), cfg)
    deviation, deviation_vec = _vector(builder, "d", u.deviation, mode in (HiroMode.DEVIATIONS, HiroMode.BOTH), cfg)
    t = builder.var("t")

    blocks: List[Tuple[Affine, List[Affine]]] = []
    if u.mode == BudgetMode.VARIABLE_BUDGET:
        blocks.append((Affine.const(0), [l + d for l, d in zip(lower, deviation)]))
        blocks.append((Affine.const(u.gamma), list(lower)))
    elif deviation_vec is None:
        for pi in minmax_budget_breakpoints(u):
            costs = [l + Affine.const(max(d - pi, Fraction(0))) for l, d in zip(lower, u.deviation)]
            blocks.append((Affine.const(u.gamma * pi), costs))
    else:
        blocks.append((Affine.const(0), [l + d for l, d in zip(lower, deviation)]))
        for k in range(inst.n):
            costs = [
                lower[i] + (deviation[i] - deviation[k] if i > k else Affine.const(0)) for i in range(inst.n)
            ]
            blocks.append((deviation[k].scaled(u.gamma), costs))
        for i in range(inst.n - 1):
            builder.add_constraint(
                {deviation_vec.columns[i]: 1, deviation_vec.columns[i + 1]: -1},
                Relation.LE,
                0,
                name=variable_name("order", i + 1),
            )

    for k, (offset, costs) in enumerate(blocks, start=1):
        add_selection_dual(builder, t, k, inst.p, costs, offset)
    builder.set_objective({t: 1}, Sense.MAX)
    logger.debug(f"hiro_minmax_budgeted: {len(blocks)} dual blocks, mode {mode.value}")
    return builder.build(), lower_vec, deviation_vec


def harden_budgeted(inst: ProblemInstance, cfg: HiroConfig) -> ProblemInstance:
    """Harden a MinMax × budgeted instance with one LP.

    The result is checked with the enumeration solver; if rounding left it
    below the input, the input is returned instead.

    Raises:
        UnsupportedPairingError: If the instance is not MinMax × budgeted
        HiroError: If the mode does not apply or the LP has no optimum
    """
    if inst.pairing != Pairing.MINMAX_BUDGETED:
        raise UnsupportedPairingError(f"budgeted hardening needs MM-B, got {inst.pairing.value}")
    mode = resolve_box_mode(cfg.mode, DEFAULT_BUDGETED_MODE)
    if cfg.b == 0:
        logger.info("b = 0: the neighborhood is a singleton, nothing to harden")
        return inst

    u = inst.uncertainty
    order = None
    work = inst
    if mode != HiroMode.LOWER_BOUNDS and u.mode != BudgetMode.VARIABLE_BUDGET:
        order = tuple(sorted(range(inst.n), key=lambda i: (u.deviation[i], i)))
        work = permute_items(inst, order)

    model, lower_vec, deviation_vec = build_budgeted_model(work, cfg, mode)
    result = solve_lp(model, Clock(cfg.time_limit).solver_cfg(cfg.solver_cfg))
    if result.status != SolveStatus.OPTIMAL:
        raise HiroError(f"{model.name} ended with {result.status.value}")

    work_u = work.uncertainty
    hardened_set = BudgetedSet(
        lower=read_perturbed(model, lower_vec, result) if lower_vec else work_u.lower,
        deviation=read_perturbed(model, deviation_vec, result) if deviation_vec else work_u.deviation,
        gamma=work_u.gamma,
        mode=work_u.mode,
    )
    hardened = work.replace(uncertainty=hardened_set)

    _, input_value = solve_minmax_budgeted_enumeration(inst)
    _, value = solve_minmax_budgeted_enumeration(hardened)
    logger.info(
        f"Budgeted hardening ({mode.value}): LP {float(result.best_objective()):.6f}, "
        f"robust value {float(input_value):.6f} -> {float(value):.6f}"
    )
    if value < input_value:
        logger.warning("Hardened instance is below the input after rounding; returning the input")
        return inst
    return with_lineage(hardened, inst, cfg, mode.value, 1, permutation=order)
