"""Min-max formulations: epigraph over scenarios and the dualized budgeted model."""

from robust_selection_bench.milp import Relation
from robust_selection_bench.schemas import BudgetMode, Pairing, ProblemInstance

from .breakpoints import minmax_budget_breakpoints
from .bundle import FormulationBuilder, ModelBundle


def build_minmax_discrete(inst: ProblemInstance) -> ModelBundle:
    """min t  s.t.  t >= c^j·x for every scenario j,  Σx = p."""
    builder = FormulationBuilder("minmax_discrete")
    x = builder.selection(inst.n)
    t = builder.var("t")
    for j, scenario in enumerate(inst.uncertainty.scenarios):
        terms = {t: 1}
        terms.update({x[i]: -c for i, c in enumerate(scenario)})
        builder.add_constraint(terms, Relation.GE, 0, name=f"scenario[{j + 1}]")
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    builder.set_objective({t: 1})
    return ModelBundle(builder.build(), inst.pairing, inst.n, inst.p, varmap=builder.varmap)


def build_minmax_interval(inst: ProblemInstance) -> ModelBundle:
    """Nominal problem on the upper bounds."""
    builder = FormulationBuilder("minmax_interval")
    x = builder.selection(inst.n)
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    builder.set_objective({x[i]: u for i, u in enumerate(inst.uncertainty.upper)})
    return ModelBundle(builder.build(), inst.pairing, inst.n, inst.p, varmap=builder.varmap)


def build_minmax_budgeted(inst: ProblemInstance) -> ModelBundle:
    """Inner worst case replaced by its LP dual.

    Item budgets: min l·x + Γπ + Σρ_i with π + ρ_i >= d_i x_i.
    Deviation-sum budget: min l·x + Γπ + Σ d_i ρ_i with π + ρ_i >= x_i.
    """
    u = inst.uncertainty
    variable_budget = u.mode == BudgetMode.VARIABLE_BUDGET
    builder = FormulationBuilder("minmax_budgeted")
    x = builder.selection(inst.n)
    pi = builder.var("pi")
    rho = [builder.var("rho", i + 1) for i in range(inst.n)]
    objective = {x[i]: l for i, l in enumerate(u.lower)}
    objective[pi] = u.gamma
    for i in range(inst.n):
        objective[rho[i]] = u.deviation[i] if variable_budget else 1
        scale = 1 if variable_budget else u.deviation[i]
        builder.add_constraint({pi: 1, rho[i]: 1, x[i]: -scale}, Relation.GE, 0, name=f"budget[{i + 1}]")
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    builder.set_objective(objective)
    return ModelBundle(
        builder.build(),
        Pairing.MINMAX_BUDGETED,
        inst.n,
        inst.p,
        varmap=builder.varmap,
        breakpoints=minmax_budget_breakpoints(u),
    )
