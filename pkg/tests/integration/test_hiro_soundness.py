"""Acceptance checks for hard-instance generation.

Every hardened instance must lie in the neighborhood of its input, be at
least as hard, and survive a write/read cycle with its lineage. On toy
MinMax instances the iterative loop must also reach the true optimum of the
hardening problem, computed here by an independent exhaustive oracle.
"""

import itertools
from fractions import Fraction

import pytest

from robust_selection_bench.core import brute_force_robust_opt
from robust_selection_bench.hiro import PerturbationNeighborhood, applicable_modes, harden
from robust_selection_bench.io import canonical_bytes, read_instance, write_instance
from robust_selection_bench.milp import ModelBuilder, Relation, Sense, solve_lp
from robust_selection_bench.samplers import sample_instance
from robust_selection_bench.schemas import (
    Criterion,
    GeneratorId,
    HiroConfig,
    ProblemInstance,
    ShapeParams,
    SolveStatus,
)

SHAPES = {
    "MM-D": dict(n=5, p=2, N=3),
    "MMR-D": dict(n=4, p=2, N=2),
    "2ST-D": dict(n=4, p=2, N=2),
    "RR-D": dict(n=4, p=2, N=2, delta=1),
    "MM-B": dict(n=5, p=2, gamma=2),
    "MMR-I": dict(n=5, p=2),
}


def vectors(inst: ProblemInstance):
    """Every cost vector a hardening run may perturb, by name."""
    named = {}
    u = inst.uncertainty
    if u.kind == "discrete":
        named.update({f"scenario {j + 1}": s for j, s in enumerate(u.scenarios)})
    else:
        named["lower"] = u.lower
        named["deviation"] = u.deviation
    if inst.first_stage_costs is not None:
        named["first stage"] = inst.first_stage_costs
    return named


def check_neighborhood(hardened: ProblemInstance, original: ProblemInstance, b) -> None:
    permutation = hardened.provenance.hiro.permutation if hardened.provenance.hiro else None
    before = vectors(original)
    for name, values in vectors(hardened).items():
        center = before[name]
        if permutation is not None:
            center = tuple(center[i] for i in permutation)
        defects = PerturbationNeighborhood.around(center, b).violations(values)
        assert not defects, f"{name}: {defects}"


@pytest.mark.integration
class TestHardeningSoundness:
    """Neighborhood, monotonicity, idempotence and lineage for every hardenable generator."""

    @pytest.mark.parametrize("family", sorted(SHAPES))
    @pytest.mark.parametrize("b", [1, 2])
    def test_sound(self, family, b, tmp_path):
        shape = SHAPES[family]
        for variant in ("U", "1", "2"):
            generator = GeneratorId(f"{family}-{variant}")
            inst = sample_instance(generator, ShapeParams(seed=5, **shape))
            _, before = brute_force_robust_opt(inst)
            for mode in applicable_modes(inst.pairing):
                hardened, _ = harden(inst, HiroConfig(b=b, mode=mode, max_iterations=10))
                label = f"{generator.value} {mode.value}"

                check_neighborhood(hardened, inst, b)
                _, after = brute_force_robust_opt(hardened)
                assert after >= before, label

                if hardened != inst:
                    lineage = hardened.provenance.hiro
                    assert lineage.b == b and lineage.mode == mode.value, label
                    path, _ = write_instance(hardened, tmp_path / f"{generator.value}-{mode.value}-{b}.csv")
                    restored = read_instance(path)
                    assert canonical_bytes(restored) == canonical_bytes(hardened), label
                    assert restored.provenance == hardened.provenance, label

    @pytest.mark.parametrize("family", sorted(SHAPES))
    def test_zero_budget_is_identity(self, family):
        """b = 0 gives back the same bytes."""
        inst = sample_instance(GeneratorId(f"{family}-U"), ShapeParams(seed=9, **SHAPES[family]))
        for mode in applicable_modes(inst.pairing):
            hardened, _ = harden(inst, HiroConfig(b=0, mode=mode))
            assert canonical_bytes(hardened) == canonical_bytes(inst)


def hiro_minmax_oracle(inst: ProblemInstance, b) -> Fraction:
    """Exact max over the neighborhoods of the MinMax x discrete optimum.

    max_c min_x max_j c^j·x equals the largest, over all maps λ from
    p-subsets to scenarios, of the LP  max t  s.t.  t <= c^{λ(x)}·x for
    every x, c^j in its neighborhood. Only usable at toy size: there are
    N^C(n,p) maps.
    """
    subsets = list(itertools.combinations(range(inst.n), inst.p))
    scenarios = inst.uncertainty.scenarios
    best = None
    for assignment in itertools.product(range(len(scenarios)), repeat=len(subsets)):
        builder = ModelBuilder("hiro_oracle")
        columns = [
            PerturbationNeighborhood.around(s, b).add_to(builder, "c", j + 1) for j, s in enumerate(scenarios)
        ]
        t = builder.add_free("t")
        for items, j in zip(subsets, assignment):
            row = {t: Fraction(1)}
            for i in items:
                row[columns[j][i]] = Fraction(-1)
            builder.add_constraint(row, Relation.LE, 0)
        builder.set_objective({t: 1}, Sense.MAX)
        result = solve_lp(builder.build())
        assert result.status == SolveStatus.OPTIMAL
        value = result.best_objective()
        best = value if best is None else max(best, value)
    return best


TOY_INSTANCES = [
    ((1, 9, 5), (9, 1, 5)),
    ((4, 2, 7, 1), (3, 8, 2, 6)),
    ((10, 0, 3, 3), (0, 10, 3, 3)),
    ((2, 2, 2, 2), (5, 1, 1, 5), (1, 5, 5, 1)),
]


@pytest.mark.integration
class TestToyExactness:
    """The iterative loop reaches the exhaustive hardening optimum."""

    @pytest.mark.parametrize("scenarios", TOY_INSTANCES)
    @pytest.mark.parametrize("b", [1, 2])
    def test_matches_oracle(self, scenarios, b):
        n = len(scenarios[0])
        p = 1 if n == 3 else 2
        inst = ProblemInstance(
            n=n, p=p, criterion=Criterion.MIN_MAX, uncertainty={"kind": "discrete", "scenarios": scenarios}
        )
        hardened, trace = harden(inst, HiroConfig(b=b, max_iterations=50, time_limit=None))

        assert trace.converged
        expected = hiro_minmax_oracle(inst, b)
        assert abs(float(trace.best_value) - float(expected)) <= 1e-6
        assert brute_force_robust_opt(hardened)[1] == trace.best_value
