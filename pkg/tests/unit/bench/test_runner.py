"""Tests for the batch runner."""

import pytest

from robust_selection_bench.bench import expand_tasks, expected_record_count, run_experiment, sort_records
from robust_selection_bench.io import read_instance
from robust_selection_bench.schemas import ERROR_STATUS, ExperimentConfig, HiroMode


@pytest.fixture
def small_grid():
    """Two MM-D-U instances, each also hardened with b = 1."""
    return ExperimentConfig(
        name="small",
        generators=["MM-D-U"],
        tuples=[{"n": 5, "p": 2, "N": 3}],
        seeds_per_cell=2,
        hiro_b=[1],
        hiro_max_iterations=5,
    )


class TestExpandTasks:
    """Tests for task expansion and record counts."""

    def test_record_count(self):
        """Test 3 generators x 2 tuples x 5 seeds give 30 records without hardening."""
        cfg = ExperimentConfig(
            generators=["MM-D-U", "MM-D-1", "MM-D-2"],
            tuples=[{"n": 5, "p": 2, "N": 3}, {"n": 6, "p": 3, "N": 3}],
        )
        assert len(expand_tasks(cfg)) == 30
        assert expected_record_count(cfg) == 30

    def test_hardening_variants(self):
        """Test every budget adds one record per applicable mode."""
        cfg = ExperimentConfig(
            generators=["2ST-D-U"],
            tuples=[{"n": 5, "p": 2, "N": 3}],
            seeds_per_cell=1,
            hiro_b=[1, 2],
            hiro_modes=["FirstStageOnly", "FirstAndSecondStage", "LowerBounds"],
        )
        (task,) = expand_tasks(cfg)
        assert {mode for _, mode in task.variants} == {HiroMode.FIRST_STAGE_ONLY, HiroMode.FIRST_AND_SECOND_STAGE}
        assert task.record_count == 5

    def test_unhardenable_generator(self):
        """Test pairings without a hardening model are only sampled."""
        cfg = ExperimentConfig(
            generators=["2ST-CB-U"], tuples=[{"n": 5, "p": 2, "gamma": 2}], seeds_per_cell=1, hiro_b=[1]
        )
        assert expected_record_count(cfg) == 1

    def test_empty_grid(self):
        """Test a config without generators has no tasks."""
        assert expected_record_count(ExperimentConfig()) == 0
        assert run_experiment(ExperimentConfig()) == []


class TestRunExperiment:
    """Tests for run_experiment."""

    def test_records(self, small_grid, tmp_path):
        """Test every instance is solved, persisted and hardened at least as hard."""
        records = run_experiment(small_grid, tmp_path)

        assert len(records) == expected_record_count(small_grid) == 4
        assert all(r.status == "Optimal" for r in records)
        for seed in (1, 2):
            sampled = next(r for r in records if r.seed == seed and r.b is None)
            hardened = next(r for r in records if r.seed == seed and r.b is not None)
            assert hardened.hiro_mode == "Scenarios"
            assert hardened.exact_objective >= sampled.exact_objective

        files = sorted((tmp_path / "instances").glob("*.csv"))
        assert {f.stem for f in files} == {r.instance_id for r in records}
        inst = read_instance(files[0])
        assert inst.provenance.generator == "MM-D-U"

    def test_deterministic(self, small_grid):
        """Test two runs of the same grid agree on instances and values."""
        first = run_experiment(small_grid)
        second = run_experiment(small_grid)
        key = [(r.instance_id, r.exact_objective, r.status) for r in first]
        assert key == [(r.instance_id, r.exact_objective, r.status) for r in second]

    def test_failures_become_error_records(self):
        """Test a cell the generator rejects yields Error rows instead of aborting."""
        cfg = ExperimentConfig(
            generators=["MM-B-U", "MM-D-U"], tuples=[{"n": 5, "p": 2, "N": 3}], seeds_per_cell=1
        )
        records = run_experiment(cfg)

        assert len(records) == 2
        failed = next(r for r in records if r.generator == "MM-B-U")
        assert failed.status == ERROR_STATUS
        assert "takes no N" in failed.error
        assert next(r for r in records if r.generator == "MM-D-U").status == "Optimal"

    def test_sort_records(self, small_grid):
        """Test the canonical order puts sampled rows before hardened ones."""
        records = run_experiment(small_grid)
        assert sort_records(reversed(records)) == records
        assert [r.b is not None for r in records] == [False, True, False, True]
