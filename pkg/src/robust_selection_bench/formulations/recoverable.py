"""Recoverable formulations.

All three read the recovery bound as ``kept_min``: at least that many
first-stage items stay in the recovered solution.
"""

import logging
from fractions import Fraction

from robust_selection_bench.errors import InstanceTooLargeError
from robust_selection_bench.milp import Relation
from robust_selection_bench.schemas import BudgetMode, ProblemInstance

from .breakpoints import recoverable_breakpoints
from .bundle import FormulationBuilder, ModelBundle

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

PAIR_FORMULATION_MAX_N = 40


def _pos(value: Fraction) -> Fraction:
    return value if value > 0 else ZERO


def build_recoverable_discrete(inst: ProblemInstance) -> ModelBundle:
    """One recovered solution y^j per scenario, linked to x through z^j.

    min C·x + t  s.t.  t >= c^j·y^j,  Σx = p,  Σ_i y_ij = p,
    z_ij <= x_i,  z_ij <= y_ij,  Σ_i z_ij >= kept_min.
    """
    kept = inst.kept_min
    builder = FormulationBuilder("recoverable_discrete")
    x = builder.selection(inst.n)
    t = builder.var("t")
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    for j, scenario in enumerate(inst.uncertainty.scenarios, start=1):
        y = [builder.var("y", i + 1, j, binary=True) for i in range(inst.n)]
        terms = {t: 1}
        terms.update({y[i]: -c for i, c in enumerate(scenario)})
        builder.add_constraint(terms, Relation.GE, 0, name=f"scenario[{j}]")
        builder.add_constraint({yi: 1 for yi in y}, Relation.EQ, inst.p, name=f"cardinality[{j}]")
        if kept == 0:
            continue
        z = [builder.var("z", i + 1, j, upper=1) for i in range(inst.n)]
        for i in range(inst.n):
            builder.add_constraint({z[i]: 1, x[i]: -1}, Relation.LE, 0, name=f"keep_x[{i + 1},{j}]")
            builder.add_constraint({z[i]: 1, y[i]: -1}, Relation.LE, 0, name=f"keep_y[{i + 1},{j}]")
        builder.add_constraint({zi: 1 for zi in z}, Relation.GE, kept, name=f"kept[{j}]")
    objective = {x[i]: c for i, c in enumerate(inst.first_stage_costs)}
    objective[t] = 1
    builder.set_objective(objective)
    return ModelBundle(builder.build(), inst.pairing, inst.n, inst.p, varmap=builder.varmap)


def build_recoverable_discrete_budgeted(inst: ProblemInstance) -> ModelBundle:
    """Recovery dual enumerated over (α, β) pairs.

    For every pair k, with a_i = [α + β − l_i]₊ and b_i = [α − l_i]₊:
    t >= C·x + pα + κβ − Σ_i (b_i + (a_i − b_i) x_i) + Γπ^k + Σ_i ρ^k_i and
    π^k + ρ^k_i >= w0_i + (w1_i − w0_i) x_i, where w0 and w1 are the
    deviation gains at x_i = 0 and x_i = 1 and κ = kept_min.

    Raises:
        InstanceTooLargeError: If n exceeds the pair-formulation limit
    """
    if inst.n > PAIR_FORMULATION_MAX_N:
        raise InstanceTooLargeError(
            f"the pair formulation refuses n={inst.n} (limit {PAIR_FORMULATION_MAX_N})",
            n=inst.n,
            limit=PAIR_FORMULATION_MAX_N,
        )
    u = inst.uncertainty
    C = inst.first_stage_costs
    kept = inst.kept_min
    breakpoints = recoverable_breakpoints(u.lower, u.deviation, with_beta=kept > 0)
    logger.debug(f"Recoverable pair formulation with {breakpoints.K} pairs for n={inst.n}")
    builder = FormulationBuilder("recoverable_discrete_budgeted")
    x = builder.selection(inst.n)
    t = builder.var("t")
    for k, (alpha, beta) in enumerate(breakpoints, start=1):
        pi = builder.var("pi", k)
        terms = {t: 1, pi: -u.gamma}
        rhs = inst.p * alpha + kept * beta
        for i in range(inst.n):
            l, d = u.lower[i], u.deviation[i]
            inside = _pos(alpha + beta - l)
            outside = _pos(alpha - l)
            rhs -= outside
            terms[x[i]] = -(C[i] - inside + outside)
            w0 = outside - _pos(alpha - l - d)
            w1 = inside - _pos(alpha + beta - l - d)
            if w0 == 0 and w1 == 0:
                continue
            rho = builder.var("rho", i + 1, k)
            terms[rho] = -1
            builder.add_constraint(
                {pi: 1, rho: 1, x[i]: -(w1 - w0)}, Relation.GE, w0, name=f"budget[{i + 1},{k}]"
            )
        builder.add_constraint(terms, Relation.GE, rhs, name=f"pair[{k}]")
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    builder.set_objective({t: 1})
    return ModelBundle(
        builder.build(), inst.pairing, inst.n, inst.p, varmap=builder.varmap, breakpoints=breakpoints
    )


def build_recoverable_continuous_budgeted(inst: ProblemInstance) -> ModelBundle:
    """Continuous recovery y with the budget dualized.

    min C·x + l·y + Γπ + Σρ_i  s.t.  Σx = p,  Σy = p,  z <= x,  z <= y,
    Σz >= kept_min,  π + ρ_i >= d_i y_i (deviation-sum budget: >= y_i, cost d_i ρ_i).
    """
    u = inst.uncertainty
    variable_budget = u.mode == BudgetMode.VARIABLE_BUDGET
    kept = inst.kept_min
    builder = FormulationBuilder("recoverable_continuous_budgeted")
    x = builder.selection(inst.n)
    y = [builder.var("y", i + 1, upper=1) for i in range(inst.n)]
    pi = builder.var("pi")
    rho = [builder.var("rho", i + 1) for i in range(inst.n)]
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    builder.add_constraint({yi: 1 for yi in y}, Relation.EQ, inst.p, name="recovery")
    if kept > 0:
        z = [builder.var("z", i + 1, upper=1) for i in range(inst.n)]
        for i in range(inst.n):
            builder.add_constraint({z[i]: 1, x[i]: -1}, Relation.LE, 0, name=f"keep_x[{i + 1}]")
            builder.add_constraint({z[i]: 1, y[i]: -1}, Relation.LE, 0, name=f"keep_y[{i + 1}]")
        builder.add_constraint({zi: 1 for zi in z}, Relation.GE, kept, name="kept")
    for i in range(inst.n):
        scale = 1 if variable_budget else u.deviation[i]
        builder.add_constraint({pi: 1, rho[i]: 1, y[i]: -scale}, Relation.GE, 0, name=f"budget[{i + 1}]")
    objective = {x[i]: c for i, c in enumerate(inst.first_stage_costs)}
    objective.update({y[i]: l for i, l in enumerate(u.lower)})
    objective[pi] = u.gamma
    objective.update({rho[i]: (u.deviation[i] if variable_budget else 1) for i in range(inst.n)})
    builder.set_objective(objective)
    return ModelBundle(builder.build(), inst.pairing, inst.n, inst.p, varmap=builder.varmap)
