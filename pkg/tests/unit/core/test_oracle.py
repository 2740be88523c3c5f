"""Unit tests for the exhaustive robust optimum."""

from fractions import Fraction

import pytest

from robust_selection_bench.core import brute_force_robust_opt
from robust_selection_bench.errors import InstanceTooLargeError
from robust_selection_bench.schemas import ProblemInstance


class TestBruteForce:
    """Tests for brute_force_robust_opt."""

    def test_minmax_discrete(self, minmax_discrete):
        """Optimum {1,4} with value 5."""
        solution, value = brute_force_robust_opt(minmax_discrete)
        assert solution.describe() == "{1,4}"
        assert value == 5

    def test_regret_discrete(self, regret_discrete):
        """Optimum {1,4} with regret 2."""
        solution, value = brute_force_robust_opt(regret_discrete)
        assert solution.describe() == "{1,4}"
        assert value == 2

    def test_two_stage_discrete(self, two_stage_discrete):
        """Buying item 1 early is optimal."""
        solution, value = brute_force_robust_opt(two_stage_discrete)
        assert solution.describe() == "{1}"
        assert value == 3

    def test_regret_interval(self, regret_interval):
        """The optimal regret is 2."""
        _, value = brute_force_robust_opt(regret_interval)
        assert value == 2

    def test_budgeted_extremes(self, minmax_budgeted):
        """Gamma=0 is nominal on lower; gamma=n is nominal on lower+dev."""
        u = minmax_budgeted.uncertainty
        for gamma, expected in ((0, 2), (3, 2 + 2 + 3)):
            inst = minmax_budgeted.replace(uncertainty=u.model_copy(update={"gamma": Fraction(gamma)}))
            assert brute_force_robust_opt(inst)[1] == expected

    def test_size_guard(self):
        """Instances above max_n are refused."""
        inst = ProblemInstance(
            n=5, p=2, criterion="MinMax", uncertainty={"kind": "discrete", "scenarios": [(1, 2, 3, 4, 5)]}
        )
        with pytest.raises(InstanceTooLargeError) as excinfo:
            brute_force_robust_opt(inst, max_n=4)
        assert excinfo.value.limit == 4
