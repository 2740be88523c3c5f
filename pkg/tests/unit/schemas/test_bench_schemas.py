"""Tests for experiment, sampler shape and hardening config schemas."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from robust_selection_bench.schemas import ExperimentConfig, GeneratorId, HiroConfig, ResultRecord, ShapeParams


class TestExperimentConfig:
    """Tests for ExperimentConfig."""

    def test_valid_data(self, valid_experiment_data):
        """Test an explicit grid with rational budgets."""
        cfg = ExperimentConfig(**valid_experiment_data)
        assert cfg.generators == (GeneratorId.MM_D_U, GeneratorId.MMR_I_U)
        assert cfg.hiro_b == (Fraction(1, 2), Fraction(1))
        assert cfg.tuples[0].N == 4

    def test_defaults(self):
        """Test the empty config is an empty grid with desk defaults."""
        cfg = ExperimentConfig()
        assert cfg.generators == ()
        assert cfg.seeds_per_cell == 5
        assert cfg.desk_max_n == 30
        assert cfg.workers == 1

    def test_preset_and_grid_conflict(self, valid_experiment_data):
        """Test a preset cannot be combined with an explicit grid."""
        with pytest.raises(ValidationError, match="either a preset or an explicit grid"):
            ExperimentConfig(**valid_experiment_data, preset="mm-d-exp1")

    @pytest.mark.parametrize("field", ["seeds_per_cell", "workers", "hiro_max_iterations", "desk_max_n"])
    def test_positive_counts(self, field):
        """Test counts must be at least 1."""
        with pytest.raises(ValidationError, match=f"{field} must be at least 1"):
            ExperimentConfig(**{field: 0})

    @pytest.mark.parametrize("scale", [0, -0.5, 1.5])
    def test_scale_range(self, scale):
        """Test scale must lie in (0, 1]."""
        with pytest.raises(ValidationError, match="scale must lie in"):
            ExperimentConfig(scale=scale)

    def test_unknown_generator(self):
        """Test generator ids are checked."""
        with pytest.raises(ValidationError):
            ExperimentConfig(generators=["MM-X-U"])


class TestShapeParams:
    """Tests for ShapeParams."""

    def test_seed_range(self):
        """Test seeds must be 64-bit unsigned."""
        assert ShapeParams(n=3, p=1, seed=2**64 - 1).seed == 2**64 - 1
        with pytest.raises(ValidationError, match="seed must lie in"):
            ShapeParams(n=3, p=1, seed=2**64)

    def test_sizes(self):
        """Test 1 <= p <= n and N >= 1."""
        with pytest.raises(ValidationError, match="1 <= p <= n"):
            ShapeParams(n=3, p=0, seed=1)
        with pytest.raises(ValidationError, match="N must be at least 1"):
            ShapeParams(n=3, p=1, N=0, seed=1)


class TestHiroConfig:
    """Tests for HiroConfig."""

    def test_defaults(self):
        """Test the default cap, limits and mode."""
        cfg = HiroConfig(b="1/2")
        assert cfg.b == Fraction(1, 2)
        assert cfg.c_max == 100
        assert cfg.time_limit == 60.0
        assert cfg.mode is None

    @pytest.mark.parametrize(
        "values,message",
        [
            ({"b": -1}, "b must be non-negative"),
            ({"b": 1, "c_max": 0}, "c_max must be positive"),
            ({"b": 1, "max_iterations": 0}, "max_iterations must be at least 1"),
        ],
    )
    def test_invalid(self, values, message):
        """Test each range check."""
        with pytest.raises(ValidationError, match=message):
            HiroConfig(**values)


class TestResultRecord:
    """Tests for ResultRecord ordering."""

    def test_sort_key_puts_sampled_first(self):
        """Test a record without b sorts before its hardened variants."""
        sampled = ResultRecord(instance_id="a", generator="MM-D-U", n=5, p=2, status="Optimal", seed=1)
        hardened = sampled.model_copy(update={"instance_id": "b", "b": Fraction(1), "hiro_mode": "Scenarios"})
        assert sorted([hardened, sampled], key=lambda r: r.sort_key) == [sampled, hardened]
