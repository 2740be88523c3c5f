"""Unit tests for instance generation and the recipe invariants."""

import pytest

from robust_selection_bench.errors import ParameterError
from robust_selection_bench.samplers import catalog_rows, check_sampler_invariants, format_catalog, sample_instance
from robust_selection_bench.samplers.rng import stream, uniform
from robust_selection_bench.schemas import Criterion, GeneratorId, ShapeParams

FAMILY_SHAPES = {
    "MM-D": dict(N=4),
    "MM-B": dict(gamma=3),
    "MMR-I": dict(),
    "MMR-D": dict(N=4),
    "2ST-D": dict(N=4),
    "2ST-DB": dict(gamma=3),
    "2ST-CB": dict(gamma=150),
    "RR-D": dict(N=4, delta=2),
    "RR-DB": dict(gamma=3, delta=2),
    "RR-CB": dict(gamma=150, delta=2),
}


def shape_for(generator: GeneratorId, seed: int = 7, n: int = 9, p: int = 4) -> ShapeParams:
    return ShapeParams(n=n, p=p, seed=seed, **FAMILY_SHAPES[generator.family])


class TestSampleInstance:
    """Tests for sample_instance."""

    @pytest.mark.parametrize("generator", list(GeneratorId))
    def test_deterministic(self, generator):
        """The same generator and shape give the same instance."""
        shape = shape_for(generator)
        assert sample_instance(generator, shape) == sample_instance(generator, shape)

    @pytest.mark.parametrize("generator", list(GeneratorId))
    @pytest.mark.parametrize("seed", [1, 2, 2**63 + 5])
    def test_invariants_hold(self, generator, seed):
        """Every sampled instance satisfies its recipe identities."""
        inst = sample_instance(generator, shape_for(generator, seed=seed))
        assert check_sampler_invariants(inst) == []
        assert inst.provenance.generator == generator.value
        assert inst.provenance.seed == seed

    def test_seeds_differ(self):
        """Different seeds give different instances."""
        first = sample_instance(GeneratorId.MM_D_U, shape_for(GeneratorId.MM_D_U, seed=1))
        second = sample_instance(GeneratorId.MM_D_U, shape_for(GeneratorId.MM_D_U, seed=2))
        assert first.uncertainty != second.uncertainty

    def test_more_scenarios_keep_earlier_rows(self):
        """Scenario j only depends on the seed and j."""
        few = sample_instance(GeneratorId.MM_D_U, ShapeParams(n=5, p=2, N=2, seed=11))
        many = sample_instance(GeneratorId.MM_D_U, ShapeParams(n=5, p=2, N=5, seed=11))
        assert many.uncertainty.scenarios[:2] == few.uncertainty.scenarios

    def test_uniform_range(self):
        """MM-D-U draws lie in {1..100}."""
        inst = sample_instance(GeneratorId.MM_D_U, ShapeParams(n=20, p=5, N=20, seed=3))
        values = [v for row in inst.uncertainty.scenarios for v in row]
        assert min(values) >= 1 and max(values) <= 100

    @pytest.mark.parametrize("generator", [GeneratorId.TWO_ST_D_2, GeneratorId.RR_D_2])
    def test_second_stage_within_cost_cap(self, generator):
        """Second-stage costs near C_i stay in {0..100} even for C_i close to 100."""
        for seed in range(200):
            inst = sample_instance(generator, shape_for(generator, seed=seed))
            values = [v for row in inst.uncertainty.scenarios for v in row]
            assert 0 <= min(values) and max(values) <= 100, f"{generator.value} seed {seed}"

    def test_symmetric_items(self):
        """MM-D-2 with n=4 mirrors items 1 and 2 into items 3 and 4."""
        inst = sample_instance(GeneratorId.MM_D_2, ShapeParams(n=4, p=2, N=3, seed=5))
        for row in inst.uncertainty.scenarios:
            assert row[2] == 100 - row[0]
            assert row[3] == 100 - row[1]

    def test_common_upper_bound(self):
        """MM-B-1 gives every item the upper bound 100."""
        inst = sample_instance(GeneratorId.MM_B_1, ShapeParams(n=8, p=3, gamma=2, seed=5))
        assert all(l + d == 100 for l, d in zip(inst.uncertainty.lower, inst.uncertainty.deviation))

    def test_complement_first_stage(self):
        """2ST-DB-2 sets lower = 100 - C."""
        inst = sample_instance(GeneratorId.TWO_ST_DB_2, ShapeParams(n=8, p=3, gamma=2, seed=5))
        assert all(l == 100 - c for l, c in zip(inst.uncertainty.lower, inst.first_stage_costs))

    def test_recoverable_semantics(self):
        """Recoverable generators keep the requested delta semantics."""
        inst = sample_instance(
            GeneratorId.RR_D_U, ShapeParams(n=6, p=3, N=2, delta=1, delta_semantics="ChangedAtMost", seed=1)
        )
        assert inst.criterion == Criterion.RECOVERABLE
        assert inst.kept_min == 2

    @pytest.mark.parametrize(
        "generator,shape",
        [
            (GeneratorId.MM_D_U, dict(N=2, gamma=1)),
            (GeneratorId.MM_B_U, dict()),
            (GeneratorId.MMR_I_U, dict(delta=1)),
            (GeneratorId.MM_D_U, dict(N=2, delta_semantics="KeptAtLeast")),
        ],
    )
    def test_shape_mismatch(self, generator, shape):
        """Missing or superfluous shape parameters are rejected."""
        with pytest.raises(ParameterError):
            sample_instance(generator, ShapeParams(n=4, p=2, seed=1, **shape))

    def test_stream_endpoints(self):
        """Uniform draws touch both endpoints over many samples."""
        values = uniform(stream(42, 0), 1, 100, 10_000)
        assert values.min() == 1
        assert values.max() == 100


class TestSamplerInvariants:
    """Tests for check_sampler_invariants on tampered instances."""

    def test_broken_symmetry(self):
        """Changing a mirrored entry reports a symmetry violation."""
        inst = sample_instance(GeneratorId.MM_D_2, ShapeParams(n=4, p=2, N=2, seed=9))
        rows = [list(row) for row in inst.uncertainty.scenarios]
        rows[0][2] = 101 - rows[0][0]
        tampered = inst.replace(uncertainty={"kind": "discrete", "scenarios": rows})
        violations = check_sampler_invariants(tampered)
        assert any(v.startswith("symmetry") for v in violations)

    def test_broken_complement(self):
        """Changing a lower bound of 2ST-DB-2 reports a complement violation."""
        inst = sample_instance(GeneratorId.TWO_ST_DB_2, ShapeParams(n=4, p=2, gamma=1, seed=9))
        u = inst.uncertainty
        lower = list(u.lower)
        lower[0] = 100 - inst.first_stage_costs[0] + 1
        tampered = inst.replace(uncertainty=u.model_copy(update={"lower": tuple(lower)}))
        violations = check_sampler_invariants(tampered)
        assert any(v.startswith("complement") for v in violations)

    def test_second_stage_above_cap(self):
        """A 2ST-D-2 second-stage cost above 100 is a range violation."""
        inst = sample_instance(GeneratorId.TWO_ST_D_2, ShapeParams(n=4, p=2, N=2, seed=9))
        rows = [list(row) for row in inst.uncertainty.scenarios]
        first = [98, 60, 30, 75]
        rows[0] = [101, 60, 30, 75]
        tampered = inst.replace(
            first_stage_costs=tuple(first), uncertainty={"kind": "discrete", "scenarios": rows}
        )
        violations = check_sampler_invariants(tampered)
        assert "range: c^1[1]=101 not allowed for C=98" in violations

    def test_no_generator(self, minmax_discrete):
        """Hand-written instances have no recipe to check."""
        assert check_sampler_invariants(minmax_discrete) == ["provenance: no generator recorded"]


class TestCatalog:
    """Tests for the generator catalog."""

    def test_rows(self):
        """One row per generator; aliases point at the sampling source."""
        rows = {row["id"]: row for row in catalog_rows()}
        assert len(rows) == len(GeneratorId)
        assert rows["MMR-D-1"]["alias_of"] == "MM-D-1"
        assert rows["RR-DB-2"]["params"] == "n,p,gamma,delta"

    def test_format(self):
        """The table starts with the header line."""
        text = format_catalog()
        assert text.splitlines()[0].split() == ["id", "criterion", "uncertainty", "budget_mode", "params", "invariants"]
        assert "2ST-CB-U" in text
