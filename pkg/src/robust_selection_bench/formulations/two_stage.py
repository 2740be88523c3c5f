"""Two-stage formulations: scenario copies, α-breakpoint dual and continuous budget LP."""

from fractions import Fraction

from robust_selection_bench.milp import Relation
from robust_selection_bench.schemas import BudgetMode, ProblemInstance, SolutionRole

from .breakpoints import two_stage_breakpoints
from .bundle import FormulationBuilder, ModelBundle

ZERO = Fraction(0)


def _pos(value: Fraction) -> Fraction:
    return value if value > 0 else ZERO


def build_two_stage_discrete(inst: ProblemInstance) -> ModelBundle:
    """One completion y^j per scenario.

    min C·x + t  s.t.  t >= c^j·y^j,  Σ_i (x_i + y_ij) = p,  x_i + y_ij <= 1.
    """
    scenarios = inst.uncertainty.scenarios
    builder = FormulationBuilder("two_stage_discrete")
    x = builder.selection(inst.n)
    t = builder.var("t")
    for j, scenario in enumerate(scenarios, start=1):
        y = [builder.var("y", i + 1, j, binary=True) for i in range(inst.n)]
        terms = {t: 1}
        terms.update({y[i]: -c for i, c in enumerate(scenario)})
        builder.add_constraint(terms, Relation.GE, 0, name=f"scenario[{j}]")
        cardinality = {xi: 1 for xi in x}
        cardinality.update({yi: 1 for yi in y})
        builder.add_constraint(cardinality, Relation.EQ, inst.p, name=f"cardinality[{j}]")
        for i in range(inst.n):
            builder.add_constraint({x[i]: 1, y[i]: 1}, Relation.LE, 1, name=f"link[{i + 1},{j}]")
    objective = {x[i]: c for i, c in enumerate(inst.first_stage_costs)}
    objective[t] = 1
    builder.set_objective(objective)
    return ModelBundle(
        builder.build(), inst.pairing, inst.n, inst.p, SolutionRole.PARTIAL_FIRST_STAGE, builder.varmap
    )


def build_two_stage_discrete_budgeted(inst: ProblemInstance) -> ModelBundle:
    """Completion dual enumerated over α ∈ S = {0} ∪ {l_i} ∪ {l_i + d_i}.

    For every α_k: t >= C·x + (p − Σx)α_k − Σ_i (1 − x_i)[α_k − l_i]₊ + Γπ^k + Σ_i ρ^k_i
    with π^k + ρ^k_i >= w^k_i (1 − x_i), w^k_i = [α_k − l_i]₊ − [α_k − l_i − d_i]₊.
    """
    u = inst.uncertainty
    C = inst.first_stage_costs
    breakpoints = two_stage_breakpoints(u.lower, u.deviation)
    builder = FormulationBuilder("two_stage_discrete_budgeted")
    x = builder.selection(inst.n)
    t = builder.var("t")
    for k, alpha in enumerate(breakpoints, start=1):
        gaps = [_pos(alpha - l) for l in u.lower]
        weights = [gap - _pos(alpha - l - d) for gap, l, d in zip(gaps, u.lower, u.deviation)]
        pi = builder.var("pi", k)
        terms = {t: 1, pi: -u.gamma}
        for i in range(inst.n):
            terms[x[i]] = -(C[i] - alpha + gaps[i])
            if weights[i] == 0:
                continue
            rho = builder.var("rho", i + 1, k)
            terms[rho] = -1
            builder.add_constraint(
                {pi: 1, rho: 1, x[i]: weights[i]}, Relation.GE, weights[i], name=f"budget[{i + 1},{k}]"
            )
        builder.add_constraint(
            terms, Relation.GE, inst.p * alpha - sum(gaps, ZERO), name=f"alpha[{k}]"
        )
    builder.add_constraint({xi: 1 for xi in x}, Relation.LE, inst.p, name="cardinality")
    builder.set_objective({t: 1})
    return ModelBundle(
        builder.build(),
        inst.pairing,
        inst.n,
        inst.p,
        SolutionRole.PARTIAL_FIRST_STAGE,
        builder.varmap,
        breakpoints,
    )


def build_two_stage_continuous_budgeted(inst: ProblemInstance) -> ModelBundle:
    """Continuous completion y with the budget dualized.

    min C·x + l·y + Γπ + Σρ_i  s.t.  Σ(x + y) = p,  x + y <= 1,  π + ρ_i >= d_i y_i
    (deviation-sum budget: objective Σ d_i ρ_i and π + ρ_i >= y_i).
    """
    u = inst.uncertainty
    variable_budget = u.mode == BudgetMode.VARIABLE_BUDGET
    builder = FormulationBuilder("two_stage_continuous_budgeted")
    x = builder.selection(inst.n)
    y = [builder.var("y", i + 1, upper=1) for i in range(inst.n)]
    pi = builder.var("pi")
    rho = [builder.var("rho", i + 1) for i in range(inst.n)]
    cardinality = {xi: 1 for xi in x}
    cardinality.update({yi: 1 for yi in y})
    builder.add_constraint(cardinality, Relation.EQ, inst.p, name="cardinality")
    for i in range(inst.n):
        builder.add_constraint({x[i]: 1, y[i]: 1}, Relation.LE, 1, name=f"link[{i + 1}]")
        scale = 1 if variable_budget else u.deviation[i]
        builder.add_constraint({pi: 1, rho[i]: 1, y[i]: -scale}, Relation.GE, 0, name=f"budget[{i + 1}]")
    objective = {x[i]: c for i, c in enumerate(inst.first_stage_costs)}
    objective.update({y[i]: l for i, l in enumerate(u.lower)})
    objective[pi] = u.gamma
    objective.update({rho[i]: (u.deviation[i] if variable_budget else 1) for i in range(inst.n)})
    builder.set_objective(objective)
    return ModelBundle(
        builder.build(), inst.pairing, inst.n, inst.p, SolutionRole.PARTIAL_FIRST_STAGE, builder.varmap
    )
