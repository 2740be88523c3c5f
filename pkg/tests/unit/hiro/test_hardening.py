"""Tests for hard-instance generation."""


import pytest

from robust_selection_bench.errors import HiroError, UnsupportedPairingError
from robust_selection_bench.formulations import solve_minmax_budgeted_enumeration, solve_regret_interval_enumeration
from robust_selection_bench.hiro import (
    PerturbationNeighborhood,
    applicable_modes,
    build_master,
    default_mode,
    harden,
    resolve_mode,
    robust_optimum,
    validated_q_tilde_row,
)
from robust_selection_bench.io import instance_hash
from robust_selection_bench.milp import validate_model
from robust_selection_bench.samplers import sample_instance
from robust_selection_bench.schemas import (
    BOX_MODES,
    GeneratorId,
    HiroConfig,
    HiroMode,
    Pairing,
    ProblemInstance,
    ShapeParams,
)


def in_neighborhood(values, center, b, c_max=100):
    return PerturbationNeighborhood.around(center, b, c_max).contains(values)


class TestModes:
    """Tests for mode resolution per pairing."""

    def test_defaults(self):
        """Test each hardenable pairing has a default mode."""
        assert default_mode(Pairing.MINMAX_DISCRETE) == HiroMode.SCENARIOS
        assert default_mode(Pairing.TWO_STAGE_DISCRETE) == HiroMode.FIRST_STAGE_ONLY
        assert default_mode(Pairing.MINMAX_BUDGETED) == HiroMode.LOWER_BOUNDS
        assert default_mode(Pairing.REGRET_INTERVAL) == HiroMode.BOTH
        assert default_mode(Pairing.MINMAX_INTERVAL) is None

    def test_applicable_modes(self):
        """Test box pairings take the box modes and staged ones both stage modes."""
        assert applicable_modes(Pairing.REGRET_INTERVAL) == BOX_MODES
        assert applicable_modes(Pairing.RECOVERABLE_DISCRETE) == (
            HiroMode.FIRST_STAGE_ONLY,
            HiroMode.FIRST_AND_SECOND_STAGE,
        )
        assert applicable_modes(Pairing.TWO_STAGE_CONTINUOUS_BUDGETED) == ()

    def test_resolve_mode_rejects_foreign_mode(self, minmax_discrete):
        """Test a box mode does not apply to a scenario list."""
        with pytest.raises(HiroError, match="does not apply"):
            resolve_mode(minmax_discrete, HiroMode.LOWER_BOUNDS)

    def test_unsupported_pairing(self):
        """Test pairings without a hardening model are refused."""
        inst = ProblemInstance(
            n=2, p=1, criterion="MinMax", uncertainty={"kind": "interval", "lower": (1, 2), "deviation": (1, 1)}
        )
        with pytest.raises(UnsupportedPairingError):
            harden(inst, HiroConfig(b=1))

    def test_box_mode_on_budgeted_only(self, minmax_budgeted):
        """Test the scenario mode is refused for a budgeted instance."""
        with pytest.raises(HiroError):
            harden(minmax_budgeted, HiroConfig(b=1, mode=HiroMode.SCENARIOS))


class TestMasters:
    """Tests for the master models of the iterative loop."""

    def test_master_is_well_formed(self, minmax_discrete):
        """Test the MinMax master passes structural validation."""
        solution, _ = robust_optimum(minmax_discrete)
        master = build_master(minmax_discrete, [solution], HiroConfig(b=1), HiroMode.SCENARIOS)
        assert validate_model(master.model) == []
        assert master.candidate_count == 1
        assert master.first_stage is None

    @pytest.mark.parametrize("mode", [HiroMode.FIRST_STAGE_ONLY, HiroMode.FIRST_AND_SECOND_STAGE])
    def test_two_stage_master_modes(self, two_stage_discrete, mode):
        """Test the second-stage vectors are perturbed only in FirstAndSecondStage."""
        solution, _ = robust_optimum(two_stage_discrete)
        master = build_master(two_stage_discrete, [solution], HiroConfig(b=1), mode)
        assert validate_model(master.model) == []
        assert master.first_stage is not None
        perturbs_scenarios = any(vector is not None for vector in master.scenarios)
        assert perturbs_scenarios == (mode == HiroMode.FIRST_AND_SECOND_STAGE)

    def test_master_needs_a_candidate(self, minmax_discrete):
        """Test an empty pool is refused."""
        with pytest.raises(HiroError):
            build_master(minmax_discrete, [], HiroConfig(b=1), HiroMode.SCENARIOS)


class TestIterativeHardening:
    """Tests for the master/sub loop on discrete scenario sets."""

    def test_zero_budget_returns_input(self, hiro_minmax):
        """Test b = 0 leaves the instance unchanged."""
        hardened, trace = harden(hiro_minmax, HiroConfig(b=0))
        assert hardened == hiro_minmax
        assert trace.converged
        assert trace.best_value == trace.input_value == 5

    def test_minmax_raises_optimum(self, hiro_minmax):
        """Test b = 1 lifts the optimum from 5 to 6."""
        hardened, trace = harden(hiro_minmax, HiroConfig(b=1))

        assert trace.input_value == 5
        assert trace.best_value == 6
        assert trace.converged
        _, value = robust_optimum(hardened)
        assert value == 6
        for scenario, original in zip(hardened.uncertainty.scenarios, hiro_minmax.uncertainty.scenarios):
            assert in_neighborhood(scenario, original, 1)

    def test_lineage(self, hiro_minmax):
        """Test the hardened instance records its parent and the run parameters."""
        hardened, trace = harden(hiro_minmax, HiroConfig(b=1))
        lineage = hardened.provenance.hiro
        assert lineage.parent_hash == instance_hash(hiro_minmax)
        assert lineage.b == 1
        assert lineage.mode == "Scenarios"
        assert lineage.iterations >= 1

    def test_regret_discrete_never_decreases(self, regret_discrete):
        """Test the returned instance is at least as hard as the input."""
        hardened, trace = harden(regret_discrete, HiroConfig(b=1))
        assert trace.input_value == 2
        assert trace.best_value >= 2
        assert robust_optimum(hardened)[1] == trace.best_value

    def test_two_stage_first_stage_only(self, two_stage_discrete):
        """Test FirstStageOnly moves C inside its neighborhood and keeps the scenarios."""
        hardened, trace = harden(two_stage_discrete, HiroConfig(b=1))
        assert trace.best_value >= trace.input_value == 3
        assert hardened.uncertainty.scenarios == two_stage_discrete.uncertainty.scenarios
        assert in_neighborhood(hardened.first_stage_costs, two_stage_discrete.first_stage_costs, 1)

    def test_two_stage_both_stages_on_sampled_instance(self):
        """Test FirstAndSecondStage accepts sampled 2ST-D-2 costs and stays within the cap."""
        inst = sample_instance(GeneratorId.TWO_ST_D_2, ShapeParams(n=6, p=3, N=2, seed=0))
        hardened, trace = harden(inst, HiroConfig(b=1, mode=HiroMode.FIRST_AND_SECOND_STAGE, max_iterations=3))
        assert trace.best_value >= trace.input_value
        for row, original in zip(hardened.uncertainty.scenarios, inst.uncertainty.scenarios):
            assert in_neighborhood(row, original, 1)

    def test_iteration_limit(self, hiro_minmax):
        """Test the loop stops after max_iterations rounds."""
        _, trace = harden(hiro_minmax, HiroConfig(b=1, max_iterations=1))
        assert len(trace.iterations) <= 1


class TestBudgetedHardening:
    """Tests for single-shot MinMax × budgeted hardening."""

    def test_zero_budget_returns_input(self, minmax_budgeted):
        """Test b = 0 leaves the instance unchanged."""
        hardened, trace = harden(minmax_budgeted, HiroConfig(b=0))
        assert hardened == minmax_budgeted
        assert trace is None

    @pytest.mark.parametrize("mode", list(BOX_MODES))
    def test_never_below_input(self, minmax_budgeted, mode):
        """Test every box mode returns an instance at least as hard as the input."""
        hardened, _ = harden(minmax_budgeted, HiroConfig(b=1, mode=mode))
        _, value = solve_minmax_budgeted_enumeration(hardened)
        assert value >= 5

    def test_lower_bounds_stay_in_neighborhood(self, minmax_budgeted):
        """Test LowerBounds keeps the deviations and moves l within its box."""
        hardened, _ = harden(minmax_budgeted, HiroConfig(b=1, mode=HiroMode.LOWER_BOUNDS))
        assert hardened.uncertainty.deviation == minmax_budgeted.uncertainty.deviation
        assert in_neighborhood(hardened.uncertainty.lower, minmax_budgeted.uncertainty.lower, 1)


class TestRegretIntervalHardening:
    """Tests for MinMaxRegret × interval hardening."""

    def test_q_tilde_row_correction(self):
        """Test the reference check selects the deviation row and records the fix."""
        row, corrections = validated_q_tilde_row()
        assert row == "deviation"
        assert corrections == ("q_tilde_row: l replaced by d",)

    def test_zero_budget_returns_input(self, regret_interval):
        """Test b = 0 leaves the instance unchanged."""
        hardened, trace = harden(regret_interval, HiroConfig(b=0))
        assert hardened == regret_interval
        assert trace is None

    def test_never_below_input(self, regret_interval):
        """Test the hardened regret is at least the input's 2."""
        hardened, _ = harden(regret_interval, HiroConfig(b=1))
        _, value = solve_regret_interval_enumeration(hardened)
        assert value >= 2
        if hardened != regret_interval:
            assert hardened.provenance.hiro.corrections == ("q_tilde_row: l replaced by d",)
            u, original = hardened.uncertainty, regret_interval.uncertainty
            assert in_neighborhood(u.lower, original.lower, 1)
            assert in_neighborhood(u.deviation, original.deviation, 1)
