"""Exact robust evaluation of a fixed first-stage solution.

``evaluate_robust`` dispatches on the instance pairing. Discrete sets are
scanned scenario by scenario; interval and item-budgeted adversaries have
closed forms; the discrete-budgeted two-stage and recoverable adversaries are
evaluated through their dual breakpoints; the continuous-budgeted ones through
a small LP whose row duals give the worst-case deviation pattern.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from robust_selection_bench.errors import CardinalityError, ParameterError, SolverError, UnsupportedPairingError
from robust_selection_bench.milp import ModelBuilder, Relation, solve_lp
from robust_selection_bench.schemas import (
    BudgetMode,
    Criterion,
    EvaluationReport,
    Pairing,
    ProblemInstance,
    SelectionSolution,
    SolutionRole,
    SolveStatus,
    SolverConfig,
    Witness,
    to_cost_vector,
)

from .selection import nominal_value, recovery_best_response, second_stage_completion, solve_nominal_selection

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

# The inner LPs are tiny; certify them regardless of size.
_INNER_LP_CONFIG = SolverConfig(exact_check=True, exact_check_max_nonzeros=10 ** 7)


def _pos(value: Fraction) -> Fraction:
    return value if value > 0 else ZERO


def _dot(c: Sequence[Fraction], x: SelectionSolution) -> Fraction:
    return sum((c[i] for i in x.support), ZERO)


def _top_sum(weights: Sequence[Fraction], gamma: Fraction) -> Tuple[Fraction, List[Fraction]]:
    """Largest total of Γ weights with fractional top-up; returns (value, pattern)."""
    order = sorted(range(len(weights)), key=lambda i: (-weights[i], i))
    pattern = [ZERO] * len(weights)
    remaining = gamma
    value = ZERO
    for i in order:
        if remaining <= 0 or weights[i] <= 0:
            break
        share = min(Fraction(1), remaining)
        pattern[i] = share
        value += share * weights[i]
        remaining -= share
    return value, pattern


def worst_case_regret_scenario(x: SelectionSolution, lower, deviation) -> Tuple[Fraction, ...]:
    """Regret worst case: chosen items at their upper bound, the rest at their lower bound.

    Raises:
        ParameterError: If the vectors do not match the solution length
    """
    lower = to_cost_vector(lower)
    deviation = to_cost_vector(deviation)
    if len(lower) != x.n or len(deviation) != x.n:
        raise ParameterError(
            f"vectors of length {len(lower)}/{len(deviation)} do not match n={x.n}"
        )
    return tuple(l + d if chosen else l for l, d, chosen in zip(lower, deviation, x.chosen))


def _check_solution(x: SelectionSolution, inst: ProblemInstance) -> None:
    if x.n != inst.n:
        raise CardinalityError(f"solution has {x.n} items, instance has n={inst.n}")
    if x.p != inst.p:
        raise CardinalityError(f"solution targets p={x.p}, instance has p={inst.p}")
    if inst.criterion == Criterion.TWO_STAGE:
        if x.size > inst.p:
            raise CardinalityError(f"first-stage solution selects {x.size} > p={inst.p} items")
    elif x.role != SolutionRole.FULL or x.size != inst.p:
        raise CardinalityError(
            f"{inst.criterion.value} needs a full solution with exactly p={inst.p} items"
        )


def _budgeted_minmax(x: SelectionSolution, inst: ProblemInstance) -> EvaluationReport:
    u = inst.uncertainty
    base = _dot(u.lower, x)
    if u.mode == BudgetMode.VARIABLE_BUDGET:
        deviation = [ZERO] * inst.n
        remaining = u.gamma
        for i in x.support:
            share = min(u.deviation[i], remaining)
            deviation[i] = share
            remaining -= share
        scenario = tuple(l + dv for l, dv in zip(u.lower, deviation))
        return EvaluationReport(
            objective=base + sum(deviation, ZERO),
            witness=Witness(scenario=scenario, deviation=tuple(deviation)),
        )
    weights = [u.deviation[i] if x.chosen[i] else ZERO for i in range(inst.n)]
    extra, pattern = _top_sum(weights, u.gamma)
    scenario = tuple(l + d * delta for l, d, delta in zip(u.lower, u.deviation, pattern))
    return EvaluationReport(
        objective=base + extra,
        witness=Witness(scenario=scenario, deviation=tuple(pattern)),
    )


def _discrete(x: SelectionSolution, inst: ProblemInstance) -> EvaluationReport:
    scenarios = inst.uncertainty.scenarios
    pairing = inst.pairing
    first_stage = _dot(inst.first_stage_costs, x) if inst.first_stage_costs is not None else ZERO
    best: Optional[Tuple[Fraction, int, Optional[SelectionSolution]]] = None
    for j, c in enumerate(scenarios):
        second = None
        if pairing == Pairing.MINMAX_DISCRETE:
            value = _dot(c, x)
        elif pairing == Pairing.REGRET_DISCRETE:
            value = _dot(c, x) - nominal_value(c, inst.p)
        elif pairing == Pairing.TWO_STAGE_DISCRETE:
            second, cost = second_stage_completion(x, c, inst.p)
            value = first_stage + cost
        else:
            second, cost = recovery_best_response(x, c, inst.p, inst.kept_min)
            value = first_stage + cost
        if best is None or value > best[0]:
            best = (value, j, second)
    value, j, second = best
    return EvaluationReport(
        objective=value,
        witness=Witness(scenario=scenarios[j], scenario_index=j),
        second_stage=second,
    )


def _two_stage_discrete_budgeted(x: SelectionSolution, inst: ProblemInstance) -> EvaluationReport:
    u = inst.uncertainty
    free = [i for i in range(inst.n) if not x.chosen[i]]
    r = inst.p - x.size
    candidates = sorted({ZERO, *u.lower, *(l + d for l, d in zip(u.lower, u.deviation))})
    best_value, best_pattern = None, None
    for alpha in candidates:
        gaps = {i: _pos(alpha - u.lower[i]) for i in free}
        weights = [
            gaps[i] - _pos(alpha - u.lower[i] - u.deviation[i]) if i in gaps else ZERO
            for i in range(inst.n)
        ]
        extra, pattern = _top_sum(weights, u.gamma)
        value = r * alpha - sum(gaps.values(), ZERO) + extra
        if best_value is None or value > best_value:
            best_value, best_pattern = value, pattern
    return _budgeted_report(x, inst, best_value, best_pattern)


def _recoverable_discrete_budgeted(x: SelectionSolution, inst: ProblemInstance) -> EvaluationReport:
    u = inst.uncertainty
    kept = inst.kept_min
    points = sorted({ZERO, *u.lower, *(l + d for l, d in zip(u.lower, u.deviation))})
    best_value, best_pattern = None, None
    for alpha in points:
        for gamma_point in points:
            beta = _pos(gamma_point - alpha)
            slack = [alpha + beta * x.chosen[i] - u.lower[i] for i in range(inst.n)]
            weights = [_pos(a) - _pos(a - d) for a, d in zip(slack, u.deviation)]
            extra, pattern = _top_sum(weights, u.gamma)
            value = inst.p * alpha + kept * beta - sum((_pos(a) for a in slack), ZERO) + extra
            if best_value is None or value > best_value:
                best_value, best_pattern = value, pattern
    return _budgeted_report(x, inst, best_value, best_pattern)


def _budgeted_report(
    x: SelectionSolution, inst: ProblemInstance, inner: Fraction, pattern: Sequence[Fraction]
) -> EvaluationReport:
    """Turn a dual-side inner value and deviation pattern into a verified report."""
    u = inst.uncertainty
    scenario = tuple(l + d * delta for l, d, delta in zip(u.lower, u.deviation, pattern))
    first_stage = _dot(inst.first_stage_costs, x)
    if inst.criterion == Criterion.TWO_STAGE:
        second, cost = second_stage_completion(x, scenario, inst.p)
    else:
        second, cost = recovery_best_response(x, scenario, inst.p, inst.kept_min)
    if cost != inner:
        raise SolverError(
            f"worst-case pattern reproduces {cost} but the dual bound is {inner}",
            {"pairing": inst.pairing.value},
        )
    return EvaluationReport(
        objective=first_stage + cost,
        witness=Witness(scenario=scenario, deviation=tuple(pattern)),
        second_stage=second,
    )


def _continuous_budgeted(x: SelectionSolution, inst: ProblemInstance) -> EvaluationReport:
    u = inst.uncertainty
    variable_budget = u.mode == BudgetMode.VARIABLE_BUDGET
    two_stage = inst.criterion == Criterion.TWO_STAGE
    items = [i for i in range(inst.n) if not (two_stage and x.chosen[i])]
    pattern: List[Fraction] = [ZERO] * inst.n
    inner = ZERO
    certified = True

    need = inst.p - x.size if two_stage else inst.p
    if need > 0:
        builder = ModelBuilder("inner_continuous_budget")
        y = {i: builder.add_continuous(f"y[{i + 1}]", upper=1) for i in items}
        pi = builder.add_continuous("pi")
        rho = {i: builder.add_continuous(f"rho[{i + 1}]") for i in items}
        builder.add_constraint({y[i]: 1 for i in items}, Relation.EQ, need, name="cardinality")
        if not two_stage and inst.kept_min > 0:
            builder.add_constraint(
                {y[i]: 1 for i in x.support}, Relation.GE, inst.kept_min, name="kept"
            )
        for i in items:
            scale = 1 if variable_budget else u.deviation[i]
            builder.add_constraint(
                {pi: 1, rho[i]: 1, y[i]: -scale}, Relation.GE, 0, name=f"budget[{i + 1}]"
            )
        objective = {y[i]: u.lower[i] for i in items}
        objective[pi] = u.gamma
        for i in items:
            objective[rho[i]] = u.deviation[i] if variable_budget else 1
        builder.set_objective(objective)
        result = solve_lp_checked(builder.build())
        certified = result.exact_duals is not None
        inner = result.best_objective()
        for i in items:
            name = f"budget[{i + 1}]"
            mu = result.exact_duals[name] if certified else Fraction(result.duals[name]).limit_denominator(10 ** 9)
            cap = u.deviation[i] if variable_budget else Fraction(1)
            pattern[i] = min(max(mu, ZERO), cap)

    if variable_budget:
        scenario = tuple(l + delta for l, delta in zip(u.lower, pattern))
    else:
        scenario = tuple(l + d * delta for l, d, delta in zip(u.lower, u.deviation, pattern))
    first_stage = _dot(inst.first_stage_costs, x)
    if two_stage:
        second, cost = second_stage_completion(x, scenario, inst.p)
    else:
        second, cost = recovery_best_response(x, scenario, inst.p, inst.kept_min)
    if certified and cost != inner:
        raise SolverError(f"dual deviation pattern reproduces {cost} but the LP value is {inner}")
    if not certified and abs(float(cost - inner)) > 1e-6:
        logger.warning(f"Uncertified inner LP value {float(inner)} differs from witness value {float(cost)}")
    return EvaluationReport(
        objective=first_stage + cost,
        witness=Witness(scenario=scenario, deviation=tuple(pattern)),
        second_stage=second,
    )


def solve_lp_checked(model):
    """Solve an inner LP and insist on an optimal outcome."""
    result = solve_lp(model, _INNER_LP_CONFIG)
    if result.status != SolveStatus.OPTIMAL:
        raise SolverError(f"inner LP {model.name} ended with status {result.status.value}")
    return result


def evaluate_robust(x: SelectionSolution, inst: ProblemInstance) -> EvaluationReport:
    """Exact robust value of a first-stage solution.

    Args:
        x: Full solution (PartialFirstStage allowed for TwoStage instances)
        inst: The instance

    Returns:
        EvaluationReport whose witness reproduces the objective

    Raises:
        CardinalityError: If x does not fit the instance's cardinality contract
        UnsupportedPairingError: If the pairing has no evaluator
    """
    _check_solution(x, inst)
    pairing = inst.pairing
    u = inst.uncertainty

    if pairing in (
        Pairing.MINMAX_DISCRETE,
        Pairing.REGRET_DISCRETE,
        Pairing.TWO_STAGE_DISCRETE,
        Pairing.RECOVERABLE_DISCRETE,
    ):
        return _discrete(x, inst)
    if pairing == Pairing.MINMAX_INTERVAL:
        upper = u.upper
        return EvaluationReport(objective=_dot(upper, x), witness=Witness(scenario=upper))
    if pairing == Pairing.MINMAX_BUDGETED:
        return _budgeted_minmax(x, inst)
    if pairing == Pairing.REGRET_INTERVAL:
        scenario = worst_case_regret_scenario(x, u.lower, u.deviation)
        _, optimum = solve_nominal_selection(scenario, inst.p)
        return EvaluationReport(objective=_dot(scenario, x) - optimum, witness=Witness(scenario=scenario))
    if pairing == Pairing.TWO_STAGE_DISCRETE_BUDGETED:
        return _two_stage_discrete_budgeted(x, inst)
    if pairing == Pairing.RECOVERABLE_DISCRETE_BUDGETED:
        return _recoverable_discrete_budgeted(x, inst)
    if pairing in (Pairing.TWO_STAGE_CONTINUOUS_BUDGETED, Pairing.RECOVERABLE_CONTINUOUS_BUDGETED):
        return _continuous_budgeted(x, inst)
    raise UnsupportedPairingError(f"no evaluator for pairing {pairing.value}")


def scenario_value(x: SelectionSolution, inst: ProblemInstance, scenario) -> Fraction:
    """Value of x when the adversary plays ``scenario`` (inner value plus first-stage cost)."""
    scenario = to_cost_vector(scenario)
    if inst.criterion == Criterion.MIN_MAX:
        return _dot(scenario, x)
    if inst.criterion == Criterion.MIN_MAX_REGRET:
        return _dot(scenario, x) - nominal_value(scenario, inst.p)
    first_stage = _dot(inst.first_stage_costs, x)
    if inst.criterion == Criterion.TWO_STAGE:
        return first_stage + second_stage_completion(x, scenario, inst.p)[1]
    return first_stage + recovery_best_response(x, scenario, inst.p, inst.kept_min)[1]
