"""Master problems of the iterative hardening loop.

Each master chooses perturbed costs inside the neighborhoods so that the best
of the K candidate solutions is as expensive as possible. Binary λ[j,k]
assigns scenario j to candidate k as its worst case; products of perturbed
costs with λ are linearized as d[i,j,k] <= c[j,i] and d[i,j,k] <= c̄ λ[j,k]
where c̄ is the upper end of the coefficient's box.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from robust_selection_bench.errors import HiroError
from robust_selection_bench.formulations import FormulationBuilder, variable_name
from robust_selection_bench.milp import MilpModel, Relation, Sense
from robust_selection_bench.schemas import (
    Criterion,
    DiscreteSet,
    HiroConfig,
    HiroMode,
    Pairing,
    ProblemInstance,
    SelectionSolution,
    SolveResult,
)

from .neighborhood import PerturbationNeighborhood

logger = logging.getLogger(__name__)

Terms = Dict[int, Fraction]

DEFAULT_MODES = {
    Pairing.MINMAX_DISCRETE: HiroMode.SCENARIOS,
    Pairing.REGRET_DISCRETE: HiroMode.SCENARIOS,
    Pairing.TWO_STAGE_DISCRETE: HiroMode.FIRST_STAGE_ONLY,
    Pairing.RECOVERABLE_DISCRETE: HiroMode.FIRST_STAGE_ONLY,
}

ALLOWED_MODES = {
    Pairing.MINMAX_DISCRETE: (HiroMode.SCENARIOS,),
    Pairing.REGRET_DISCRETE: (HiroMode.SCENARIOS,),
    Pairing.TWO_STAGE_DISCRETE: (HiroMode.FIRST_STAGE_ONLY, HiroMode.FIRST_AND_SECOND_STAGE),
    Pairing.RECOVERABLE_DISCRETE: (HiroMode.FIRST_STAGE_ONLY, HiroMode.FIRST_AND_SECOND_STAGE),
}


def resolve_mode(inst: ProblemInstance, mode: Optional[HiroMode]) -> HiroMode:
    """Mode of an iterative run, defaulting by pairing.

    Raises:
        HiroError: If the instance has no iterative master or the mode does not apply
    """
    pairing = inst.pairing
    if pairing not in DEFAULT_MODES:
        raise HiroError(f"iterative hardening needs discrete scenarios, got pairing {pairing.value}")
    if mode is None:
        return DEFAULT_MODES[pairing]
    if mode not in ALLOWED_MODES[pairing]:
        allowed = ", ".join(m.value for m in ALLOWED_MODES[pairing])
        raise HiroError(f"mode {mode.value} does not apply to {pairing.value} (use {allowed})")
    return mode


@dataclass(frozen=True)
class PerturbedVector:
    """Columns of a cost vector the master may change."""

    columns: Tuple[int, ...]
    neighborhood: PerturbationNeighborhood

    def upper(self, i: int) -> Fraction:
        return self.neighborhood.upper_bounds[i]


def read_perturbed(model: MilpModel, vector: PerturbedVector, result: SolveResult) -> Tuple[Fraction, ...]:
    """Solved values of a perturbed vector, projected exactly into its neighborhood."""
    exact = result.exact_assignment is not None
    names = [model.variables[j].name for j in vector.columns]
    values = [result.exact_value(name) if exact else result.value(name) for name in names]
    return vector.neighborhood.project(values, exact=exact)


@dataclass(frozen=True)
class MasterModel:
    """A built master and where its perturbed vectors live."""

    model: MilpModel
    inst: ProblemInstance
    mode: HiroMode
    candidate_count: int
    first_stage: Optional[PerturbedVector]
    scenarios: Tuple[Optional[PerturbedVector], ...]

    def _read(self, vector: PerturbedVector, result: SolveResult) -> Tuple[Fraction, ...]:
        return read_perturbed(self.model, vector, result)

    def perturbed_instance(self, result: SolveResult) -> ProblemInstance:
        """Instance carrying the master's costs, projected exactly into the neighborhoods."""
        if result.assignment is None:
            raise HiroError(f"{self.model.name}: master has no assignment ({result.status.value})")
        u = self.inst.uncertainty
        scenarios = tuple(
            self._read(vector, result) if vector is not None else original
            for vector, original in zip(self.scenarios, u.scenarios)
        )
        changes = {"uncertainty": DiscreteSet(scenarios=scenarios)}
        if self.first_stage is not None:
            changes["first_stage_costs"] = self._read(self.first_stage, result)
        return self.inst.replace(**changes)


class _MasterBuilder(FormulationBuilder):
    """FormulationBuilder with the assignment and product helpers of the masters."""

    def __init__(self, name: str, inst: ProblemInstance, cfg: HiroConfig, perturb_scenarios: bool):
        super().__init__(name)
        self.inst = inst
        self.scenarios: List[Optional[PerturbedVector]] = []
        for j, scenario in enumerate(inst.uncertainty.scenarios):
            if perturb_scenarios:
                hood = PerturbationNeighborhood.around(scenario, cfg.b, cfg.c_max)
                self.scenarios.append(PerturbedVector(hood.add_to(self, "c", j + 1), hood))
            else:
                self.scenarios.append(None)

    def assignment(self, k: int) -> Tuple[int, ...]:
        """λ[j,k] for every scenario with Σ_j λ[j,k] = 1."""
        lam = tuple(self.var("lambda", j + 1, k, binary=True) for j in range(len(self.scenarios)))
        self.add_constraint({col: 1 for col in lam}, Relation.EQ, 1, name=variable_name("assign", k))
        return lam

    def product(self, i: int, j: int, k: int, lam: int) -> Terms:
        """Terms equal to c^j_i λ[j,k] at any optimum of the master."""
        vector = self.scenarios[j]
        if vector is None:
            return {lam: self.inst.uncertainty.scenarios[j][i]}
        d = self.var("d", i + 1, j + 1, k)
        self.add_constraint(
            {d: 1, vector.columns[i]: -1}, Relation.LE, 0, name=variable_name("d_cost", i + 1, j + 1, k)
        )
        self.add_constraint(
            {d: 1, lam: -vector.upper(i)}, Relation.LE, 0, name=variable_name("d_assign", i + 1, j + 1, k)
        )
        return {d: Fraction(1)}

    def assigned_cost(self, i: int, k: int, lam: Sequence[int]) -> Terms:
        """Σ_j c^j_i λ[j,k] as linear terms."""
        terms: Terms = {}
        for j, col in enumerate(lam):
            for var, coef in self.product(i, j, k, col).items():
                terms[var] = terms.get(var, Fraction(0)) + coef
        return terms

    def finish(self, mode: HiroMode, candidates: Sequence[SelectionSolution], first_stage=None) -> MasterModel:
        return MasterModel(
            model=self.build(),
            inst=self.inst,
            mode=mode,
            candidate_count=len(candidates),
            first_stage=first_stage,
            scenarios=tuple(self.scenarios),
        )


def _subtract(row: Terms, terms: Terms, scale=1) -> None:
    for var, coef in terms.items():
        row[var] = row.get(var, Fraction(0)) - coef * scale


def build_minmax_master(
    inst: ProblemInstance, candidates: Sequence[SelectionSolution], cfg: HiroConfig
) -> MasterModel:
    """max t  s.t.  t <= Σ_j Σ_i x^k_i d[i,j,k] for every candidate k."""
    builder = _MasterBuilder("hiro_minmax_discrete", inst, cfg, perturb_scenarios=True)
    t = builder.var("t")
    for k, x in enumerate(candidates, start=1):
        lam = builder.assignment(k)
        row: Terms = {t: Fraction(1)}
        for i in x.support:
            _subtract(row, builder.assigned_cost(i, k, lam))
        builder.add_constraint(row, Relation.LE, 0, name=variable_name("value", k))
    builder.set_objective({t: 1}, Sense.MAX)
    return builder.finish(HiroMode.SCENARIOS, candidates)


def build_regret_master(
    inst: ProblemInstance, candidates: Sequence[SelectionSolution], cfg: HiroConfig
) -> MasterModel:
    """max t  s.t.  t <= Σ_j Σ_i (x^k_i d[i,j,k] − α[i,j,k]) for every candidate k.

    y[j,·] is a selection playing the scenario optimum opt(c^j), and
    α[i,j,k] >= c^j_i − c̄ (2 − λ[j,k] − y[j,i]) charges it to the candidates
    assigned to scenario j.
    """
    builder = _MasterBuilder("hiro_regret_discrete", inst, cfg, perturb_scenarios=True)
    n, p = inst.n, inst.p
    t = builder.var("t")
    y = []
    for j in range(len(builder.scenarios)):
        row = tuple(builder.var("y", j + 1, i + 1, binary=True) for i in range(n))
        builder.add_constraint({col: 1 for col in row}, Relation.EQ, p, name=variable_name("optimum", j + 1))
        y.append(row)

    for k, x in enumerate(candidates, start=1):
        lam = builder.assignment(k)
        row: Terms = {t: Fraction(1)}
        for i in x.support:
            _subtract(row, builder.assigned_cost(i, k, lam))
        for j, vector in enumerate(builder.scenarios):
            for i in range(n):
                alpha = builder.var("alpha", i + 1, j + 1, k)
                upper = vector.upper(i)
                builder.add_constraint(
                    {alpha: 1, vector.columns[i]: -1, lam[j]: -upper, y[j][i]: -upper},
                    Relation.GE,
                    -2 * upper,
                    name=variable_name("alpha_link", i + 1, j + 1, k),
                )
                row[alpha] = row.get(alpha, Fraction(0)) + 1
        builder.add_constraint(row, Relation.LE, 0, name=variable_name("value", k))
    builder.set_objective({t: 1}, Sense.MAX)
    return builder.finish(HiroMode.SCENARIOS, candidates)


def build_two_stage_master(
    inst: ProblemInstance, candidates: Sequence[SelectionSolution], cfg: HiroConfig, mode: HiroMode
) -> MasterModel:
    """Completion problem of every candidate replaced by its LP dual.

    t <= C·x^k + (p − |x^k|) β^k − Σ_{i∉x^k} γ^k_i with
    β^k <= γ^k_i + Σ_j c^j_i λ[j,k] for items outside x^k. Rows of items inside
    x^k are slack by construction and left out; a candidate with p items
    needs no second stage at all.
    """
    perturb = mode == HiroMode.FIRST_AND_SECOND_STAGE
    builder = _MasterBuilder("hiro_two_stage_discrete", inst, cfg, perturb_scenarios=perturb)
    hood = PerturbationNeighborhood.around(inst.first_stage_costs, cfg.b, cfg.c_max)
    first_stage = PerturbedVector(hood.add_to(builder, "C"), hood)
    t = builder.var("t")
    for k, x in enumerate(candidates, start=1):
        row: Terms = {t: Fraction(1)}
        for i in x.support:
            row[first_stage.columns[i]] = Fraction(-1)
        rest = inst.p - x.size
        if rest > 0:
            lam = builder.assignment(k)
            beta = builder.var("beta", k)
            row[beta] = Fraction(-rest)
            for i in range(inst.n):
                if x.chosen[i]:
                    continue
                gamma = builder.var("gamma", i + 1, k)
                row[gamma] = Fraction(1)
                dual: Terms = {beta: Fraction(1), gamma: Fraction(-1)}
                _subtract(dual, builder.assigned_cost(i, k, lam))
                builder.add_constraint(dual, Relation.LE, 0, name=variable_name("completion", i + 1, k))
        builder.add_constraint(row, Relation.LE, 0, name=variable_name("value", k))
    builder.set_objective({t: 1}, Sense.MAX)
    return builder.finish(mode, candidates, first_stage)


def build_recoverable_master(
    inst: ProblemInstance, candidates: Sequence[SelectionSolution], cfg: HiroConfig, mode: HiroMode
) -> MasterModel:
    """Recovery problem of every candidate replaced by its LP dual.

    The recovery polytope {Σy = p, Σ_{i∈x} y_i >= kept, 0 <= y <= 1} is
    integral, so its dual is exact:
    t <= C·x^k + p β^k + kept η^k − Σ_i γ^k_i with
    β^k + η^k x^k_i <= γ^k_i + Σ_j c^j_i λ[j,k], β^k free.
    """
    perturb = mode == HiroMode.FIRST_AND_SECOND_STAGE
    builder = _MasterBuilder("hiro_recoverable_discrete", inst, cfg, perturb_scenarios=perturb)
    hood = PerturbationNeighborhood.around(inst.first_stage_costs, cfg.b, cfg.c_max)
    first_stage = PerturbedVector(hood.add_to(builder, "C"), hood)
    kept = inst.kept_min
    t = builder.var("t")
    for k, x in enumerate(candidates, start=1):
        lam = builder.assignment(k)
        beta = builder.var("beta", k, lower=None)
        eta = builder.var("eta", k) if kept > 0 else None
        row: Terms = {t: Fraction(1), beta: Fraction(-inst.p)}
        if eta is not None:
            row[eta] = Fraction(-kept)
        for i in x.support:
            row[first_stage.columns[i]] = Fraction(-1)
        for i in range(inst.n):
            gamma = builder.var("gamma", i + 1, k)
            row[gamma] = Fraction(1)
            dual: Terms = {beta: Fraction(1), gamma: Fraction(-1)}
            if eta is not None and x.chosen[i]:
                dual[eta] = Fraction(1)
            _subtract(dual, builder.assigned_cost(i, k, lam))
            builder.add_constraint(dual, Relation.LE, 0, name=variable_name("recovery", i + 1, k))
        builder.add_constraint(row, Relation.LE, 0, name=variable_name("value", k))
    builder.set_objective({t: 1}, Sense.MAX)
    return builder.finish(mode, candidates, first_stage)


def build_master(
    inst: ProblemInstance, candidates: Sequence[SelectionSolution], cfg: HiroConfig, mode: HiroMode
) -> MasterModel:
    """Master for the instance's pairing."""
    if not candidates:
        raise HiroError("a master needs at least one candidate solution")
    if inst.criterion == Criterion.MIN_MAX:
        master = build_minmax_master(inst, candidates, cfg)
    elif inst.criterion == Criterion.MIN_MAX_REGRET:
        master = build_regret_master(inst, candidates, cfg)
    elif inst.criterion == Criterion.TWO_STAGE:
        master = build_two_stage_master(inst, candidates, cfg, mode)
    else:
        master = build_recoverable_master(inst, candidates, cfg, mode)
    logger.debug(
        f"Master {master.model.name} with K={len(candidates)}: {len(master.model.variables)} variables, "
        f"{len(master.model.constraints)} constraints, {len(master.model.binaries)} binaries"
    )
    return master
