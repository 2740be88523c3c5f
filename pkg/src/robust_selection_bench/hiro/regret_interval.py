"""Hardening of MinMaxRegret × interval instances.

The regret optimum is min over π >= 0 of

    g(π) = −pπ + Σ[π − l_i]₊ + (p cheapest of l_i + d_i + [π − l_i − d_i]₊ − [π − l_i]₊),

attained at a breakpoint of the instance. For a fixed set P of π values the
largest min_{π∈P} g(π) over the neighborhoods is a MILP: the selection is
dualized per π and the positive parts are linearized with indicators
z = [π >= l] and q = [π >= l + d]. Since the breakpoints move with the
perturbed vectors, P starts at the breakpoints of the input and grows by
those of every output until the model value equals the true regret of its
output.

Before the first run the model is built on a fixed reference instance with
b = 0 and compared with the enumeration solver. The row written with the lower bound,
q̃ >= l − (d̃ + b)(1 − q), fails that check; it is then replaced by
q̃ >= d − (d̃ + b)(1 − q) and the replacement is recorded in the lineage.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Set, Tuple

from robust_selection_bench.errors import HiroError, UnsupportedPairingError
from robust_selection_bench.formulations import (
    FormulationBuilder,
    regret_breakpoints,
    solve_regret_interval_enumeration,
    variable_name,
)
from robust_selection_bench.milp import MilpModel, Relation, Sense, solve_milp
from robust_selection_bench.schemas import (
    Criterion,
    HiroConfig,
    HiroMode,
    IntervalSet,
    Pairing,
    ProblemInstance,
    SolveStatus,
)

from .budgeted import resolve_box_mode
from .iterative import FLOAT_TOLERANCE, Clock, objectives_match, with_lineage
from .linear import Affine, add_selection_dual
from .masters import PerturbedVector, read_perturbed
from .neighborhood import PerturbationNeighborhood

logger = logging.getLogger(__name__)

DEFAULT_REGRET_MODE = HiroMode.BOTH

LOWER_ROW = "lower"
DEVIATION_ROW = "deviation"
ROW_CORRECTION = "q_tilde_row: l replaced by d"

REFERENCE = ProblemInstance(
    n=3,
    p=1,
    criterion=Criterion.MIN_MAX_REGRET,
    uncertainty=IntervalSet(lower=(1, 2, 0), deviation=(1, 0, 5)),
)


class _RegretModelBuilder(FormulationBuilder):
    """Positive-part linearizations against the box of a perturbed vector pair."""

    def __init__(self, inst: ProblemInstance, cfg: HiroConfig, mode: HiroMode, q_tilde_row: str, fix_signs: bool):
        super().__init__("hiro_regret_interval")
        u = inst.uncertainty
        b_lower = cfg.b if mode in (HiroMode.LOWER_BOUNDS, HiroMode.BOTH) else 0
        b_deviation = cfg.b if mode in (HiroMode.DEVIATIONS, HiroMode.BOTH) else 0
        # A fixed vector still gets columns, pinned by a b = 0 box.
        lower_hood = PerturbationNeighborhood.around(u.lower, b_lower, cfg.c_max)
        deviation_hood = PerturbationNeighborhood.around(u.deviation, b_deviation, cfg.c_max)
        self.lower_vec = PerturbedVector(lower_hood.add_to(self, "l"), lower_hood)
        self.deviation_vec = PerturbedVector(deviation_hood.add_to(self, "d"), deviation_hood)
        self.q_tilde_row = q_tilde_row
        self.fix_signs = fix_signs

    def l(self, i: int) -> Affine:
        return Affine.column(self.lower_vec.columns[i])

    def d(self, i: int) -> Affine:
        return Affine.column(self.deviation_vec.columns[i])

    def _bounds(self, i: int) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        lo_l = self.lower_vec.neighborhood.lower_bounds[i]
        hi_l = self.lower_vec.upper(i)
        return lo_l, hi_l, lo_l + self.deviation_vec.neighborhood.lower_bounds[i], hi_l + self.deviation_vec.upper(i)

    def _product(self, symbol: str, i: int, k: int, indicator: int, value: Affine, big_m: Fraction) -> Affine:
        """Column w >= value − M (1 − indicator); equals indicator·value where the model wants w small."""
        w = self.var(symbol, i + 1, k)
        row = value - Affine.column(w) + Affine.column(indicator, big_m)
        self.add_constraint(row.terms, Relation.LE, big_m - row.constant, name=variable_name(f"{symbol}_row", i + 1, k))
        return Affine.column(w)

    def gain(self, i: int, k: int, pi: Fraction) -> Affine:
        """[π − l_i]₊ where the model wants it large."""
        lo_l, hi_l, _, _ = self._bounds(i)
        if self.fix_signs and pi <= lo_l:
            return Affine.const(0)
        if self.fix_signs and pi >= hi_l:
            return Affine.const(pi) - self.l(i)
        z = self.var("z", i + 1, k, binary=True)
        zhat = self._product("zhat", i, k, z, self.l(i), hi_l)
        return Affine.column(z, pi) - zhat

    def slack(self, i: int, k: int, pi: Fraction) -> Affine:
        """[π − l_i]₊ where the model wants it small."""
        lo_l, hi_l, _, _ = self._bounds(i)
        if self.fix_signs and pi <= lo_l:
            return Affine.const(0)
        if self.fix_signs and pi >= hi_l:
            return Affine.const(pi) - self.l(i)
        s = self.var("s", i + 1, k)
        row = Affine.const(pi) - self.l(i) - Affine.column(s)
        self.add_constraint(row.terms, Relation.LE, -row.constant, name=variable_name("s_row", i + 1, k))
        return Affine.column(s)

    def excess(self, i: int, k: int, pi: Fraction) -> Affine:
        """[π − l_i − d_i]₊ where the model wants it large."""
        _, hi_l, lo_u, hi_u = self._bounds(i)
        if self.fix_signs and pi <= lo_u:
            return Affine.const(0)
        if self.fix_signs and pi >= hi_u:
            return Affine.const(pi) - self.l(i) - self.d(i)
        q = self.var("q", i + 1, k, binary=True)
        qhat = self._product("qhat", i, k, q, self.l(i), hi_l)
        # q̃ linearises q·d, the deviation term of q = [π >= l + d]. Reading it from l
        # (the lower-bound row) changes the coefficient vector, not only the big-M.
        source = self.l(i) if self.q_tilde_row == LOWER_ROW else self.d(i)
        qtilde = self._product("qtilde", i, k, q, source, self.deviation_vec.upper(i))
        return Affine.column(q, pi) - qhat - qtilde


def build_regret_interval_model(
    inst: ProblemInstance,
    cfg: HiroConfig,
    mode: HiroMode,
    pis: Iterable[Fraction],
    q_tilde_row: str = DEVIATION_ROW,
    fix_signs: bool = True,
) -> Tuple[MilpModel, PerturbedVector, PerturbedVector]:
    """max t over the neighborhoods with t <= g(π) for every π in ``pis``.

    With ``fix_signs`` the indicators whose sign is decided by the boxes
    alone are replaced by constants.
    """
    builder = _RegretModelBuilder(inst, cfg, mode, q_tilde_row, fix_signs)
    t = builder.var("t")
    pis = sorted(set(pis))
    for k, pi in enumerate(pis, start=1):
        offset = Affine.const(-inst.p * pi)
        costs: List[Affine] = []
        for i in range(inst.n):
            offset = offset + builder.gain(i, k, pi)
            costs.append(builder.l(i) + builder.d(i) + builder.excess(i, k, pi) - builder.slack(i, k, pi))
        add_selection_dual(builder, t, k, inst.p, costs, offset)
    builder.set_objective({t: 1}, Sense.MAX)
    model = builder.build()
    logger.debug(
        f"{model.name}: {len(pis)} breakpoints, {len(model.binaries)} binaries, {len(model.constraints)} rows"
    )
    return model, builder.lower_vec, builder.deviation_vec


def _reference_matches(q_tilde_row: str) -> bool:
    cfg = HiroConfig(b=0)
    pis = regret_breakpoints(REFERENCE.uncertainty.lower, REFERENCE.uncertainty.deviation)
    model, _, _ = build_regret_interval_model(REFERENCE, cfg, HiroMode.BOTH, pis, q_tilde_row, fix_signs=False)
    result = solve_milp(model, cfg.solver_cfg)
    if result.status != SolveStatus.OPTIMAL:
        return False
    _, expected = solve_regret_interval_enumeration(REFERENCE)
    objective = result.best_objective()
    logger.debug(f"Reference check with the q̃ row on {q_tilde_row}: model {float(objective)}, enumeration {expected}")
    if result.exact_objective is not None:
        return objective == expected
    return abs(float(objective) - float(expected)) <= FLOAT_TOLERANCE


@lru_cache(maxsize=None)
def validated_q_tilde_row() -> Tuple[str, Tuple[str, ...]]:
    """Row variant that reproduces the reference regret, with the corrections it took.

    Raises:
        HiroError: If neither variant reproduces it
    """
    if _reference_matches(LOWER_ROW):
        return LOWER_ROW, ()
    logger.info("Lower-bound q̃ row fails the reference instance; using q̃ >= d − M(1 − q)")
    if _reference_matches(DEVIATION_ROW):
        return DEVIATION_ROW, (ROW_CORRECTION,)
    raise HiroError("regret hardening model does not reproduce the reference instance's regret")


def harden_regret_interval(inst: ProblemInstance, cfg: HiroConfig) -> ProblemInstance:
    """Harden a MinMaxRegret × interval instance.

    Raises:
        UnsupportedPairingError: If the instance is not MinMaxRegret × interval
        HiroError: If the mode does not apply or a model is infeasible
    """
    if inst.pairing != Pairing.REGRET_INTERVAL:
        raise UnsupportedPairingError(f"regret interval hardening needs MMR-I, got {inst.pairing.value}")
    mode = resolve_box_mode(cfg.mode, DEFAULT_REGRET_MODE)
    if cfg.b == 0:
        logger.info("b = 0: the neighborhood is a singleton, nothing to harden")
        return inst

    q_tilde_row, corrections = validated_q_tilde_row()
    clock = Clock(cfg.time_limit)
    u = inst.uncertainty
    _, input_value = solve_regret_interval_enumeration(inst)
    pis: Set[Fraction] = set(regret_breakpoints(u.lower, u.deviation))
    best, best_value, best_round = inst, input_value, 0
    rounds = 0

    for round_number in range(1, cfg.max_iterations + 1):
        if clock.expired():
            logger.info(f"Time limit reached after {round_number - 1} rounds")
            break
        model, lower_vec, deviation_vec = build_regret_interval_model(inst, cfg, mode, pis, q_tilde_row)
        result = solve_milp(model, clock.solver_cfg(cfg.solver_cfg))
        if result.status == SolveStatus.INFEASIBLE:
            raise HiroError(f"{model.name} is infeasible although the input lies in its neighborhood")
        if not result.has_solution:
            logger.info(f"Model stopped with {result.status.value}; ending the loop")
            break
        rounds = round_number
        lower = read_perturbed(model, lower_vec, result)
        deviation = read_perturbed(model, deviation_vec, result)
        candidate = inst.replace(uncertainty=IntervalSet(lower=lower, deviation=deviation))
        _, value = solve_regret_interval_enumeration(candidate)
        bound = result.best_objective()
        logger.info(
            f"Round {round_number}: {len(pis)} breakpoints, model {float(bound):.6f}, regret {float(value):.6f}"
        )
        if value >= best_value:
            best, best_value, best_round = candidate, value, round_number

        if result.status == SolveStatus.OPTIMAL and objectives_match(bound, value, result.exact_objective is not None):
            break
        added = set(regret_breakpoints(lower, deviation)) - pis
        if not added:
            logger.warning(f"Round {round_number}: no new breakpoints without convergence; stopping")
            break
        pis |= added

    if best is inst:
        if rounds:
            logger.warning("No perturbed instance beat the input; returning the input")
        return inst
    logger.info(f"Regret hardening ({mode.value}): {float(input_value):.6f} -> {float(best_value):.6f}")
    return with_lineage(best, inst, cfg, mode.value, best_round, corrections=corrections)
