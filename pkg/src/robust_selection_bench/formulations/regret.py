"""Min-max regret formulations for interval and discrete uncertainty."""

import logging
from fractions import Fraction
from typing import Sequence, Tuple

from robust_selection_bench.core import nominal_value
from robust_selection_bench.errors import ParameterError
from robust_selection_bench.milp import Relation
from robust_selection_bench.schemas import ProblemInstance, to_cost_vector

from .breakpoints import regret_breakpoints
from .bundle import FormulationBuilder, ModelBundle

logger = logging.getLogger(__name__)


def scenario_optima(scenarios: Sequence, p: int) -> Tuple[Fraction, ...]:
    """Nominal optimum opt(c^j) of every scenario.

    Raises:
        ParameterError: If scenarios differ in length or p is out of range
    """
    vectors = [to_cost_vector(c) for c in scenarios]
    if not vectors:
        return ()
    n = len(vectors[0])
    if any(len(c) != n for c in vectors):
        raise ParameterError("scenarios must all have the same length")
    if not 1 <= p <= n:
        raise ParameterError(f"p must satisfy 1 <= p <= n, got p={p}, n={n}")
    return tuple(nominal_value(c, p) for c in vectors)


def build_regret_interval(inst: ProblemInstance) -> ModelBundle:
    """Inner scenario-optimum dualized.

    min u·x − pπ + Σρ_i  s.t.  π − ρ_i − d_i x_i <= l_i,  Σx = p,  π, ρ >= 0.
    """
    u = inst.uncertainty
    builder = FormulationBuilder("regret_interval")
    x = builder.selection(inst.n)
    pi = builder.var("pi")
    rho = [builder.var("rho", i + 1) for i in range(inst.n)]
    for i in range(inst.n):
        builder.add_constraint(
            {pi: 1, rho[i]: -1, x[i]: -u.deviation[i]}, Relation.LE, u.lower[i], name=f"dual[{i + 1}]"
        )
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    objective = {x[i]: ub for i, ub in enumerate(u.upper)}
    objective[pi] = -inst.p
    objective.update({r: 1 for r in rho})
    builder.set_objective(objective)
    return ModelBundle(
        builder.build(),
        inst.pairing,
        inst.n,
        inst.p,
        varmap=builder.varmap,
        breakpoints=regret_breakpoints(u.lower, u.deviation),
    )


def build_regret_discrete(inst: ProblemInstance) -> ModelBundle:
    """min t  s.t.  t >= c^j·x − opt(c^j),  Σx = p."""
    optima = scenario_optima(inst.uncertainty.scenarios, inst.p)
    builder = FormulationBuilder("regret_discrete")
    x = builder.selection(inst.n)
    t = builder.var("t")
    for j, scenario in enumerate(inst.uncertainty.scenarios):
        terms = {t: 1}
        terms.update({x[i]: -c for i, c in enumerate(scenario)})
        builder.add_constraint(terms, Relation.GE, -optima[j], name=f"scenario[{j + 1}]")
    builder.add_constraint({xi: 1 for xi in x}, Relation.EQ, inst.p, name="cardinality")
    builder.set_objective({t: 1})
    return ModelBundle(builder.build(), inst.pairing, inst.n, inst.p, varmap=builder.varmap)
