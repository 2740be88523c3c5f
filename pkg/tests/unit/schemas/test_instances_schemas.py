"""Tests for uncertainty set, instance and solution schemas."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from robust_selection_bench.schemas import (
    BudgetedSet,
    BudgetMode,
    DeltaSemantics,
    DiscreteSet,
    IntervalSet,
    Pairing,
    ProblemInstance,
    SelectionSolution,
    SolutionRole,
)


class TestUncertaintySets:
    """Tests for the three uncertainty set kinds."""

    def test_discrete(self):
        """Test scenario counts and item counts."""
        u = DiscreteSet(scenarios=[(1, 2, 3), (4, 5, 6)])
        assert u.n == 3
        assert u.scenario_count == 2

    def test_discrete_needs_a_scenario(self):
        """Test an empty scenario list is refused."""
        with pytest.raises(ValidationError, match="at least one scenario"):
            DiscreteSet(scenarios=[])

    def test_discrete_ragged(self):
        """Test scenarios of different lengths are refused."""
        with pytest.raises(ValidationError, match="scenario 2 has 2 entries"):
            DiscreteSet(scenarios=[(1, 2, 3), (4, 5)])

    def test_negative_costs(self):
        """Test negative entries are refused with their position."""
        with pytest.raises(ValidationError, match=r"lower\[2\] must be non-negative"):
            IntervalSet(lower=(1, -1), deviation=(0, 0))

    def test_interval_upper(self):
        """Test the upper bounds are lower plus deviation."""
        assert IntervalSet(lower=(1, 2), deviation=(3, 0)).upper == (4, 2)

    def test_budgeted(self, valid_budgeted_data):
        """Test valid budgeted data with a rational budget."""
        u = BudgetedSet(**valid_budgeted_data)
        assert u.gamma == Fraction(3, 2)
        assert u.mode == BudgetMode.CONTINUOUS_ITEMS
        assert u.is_continuous

    def test_budget_above_n(self, valid_budgeted_data):
        """Test item budgets cannot exceed n."""
        with pytest.raises(ValidationError, match="must not exceed n=3"):
            BudgetedSet(**{**valid_budgeted_data, "gamma": 4})

    def test_variable_budget_above_n(self, valid_budgeted_data):
        """Test a deviation-sum budget may exceed n."""
        u = BudgetedSet(**{**valid_budgeted_data, "gamma": 10, "mode": "VariableBudget"})
        assert u.gamma == 10

    def test_discrete_items_integral(self, valid_budgeted_data):
        """Test DiscreteItems needs an integral budget."""
        with pytest.raises(ValidationError, match="integral"):
            BudgetedSet(**{**valid_budgeted_data, "mode": "DiscreteItems"})


class TestProblemInstance:
    """Tests for ProblemInstance validation."""

    def test_pairings(self, minmax_discrete, regret_interval, minmax_budgeted, two_stage_discrete):
        """Test the pairing follows criterion and uncertainty kind."""
        assert minmax_discrete.pairing == Pairing.MINMAX_DISCRETE
        assert regret_interval.pairing == Pairing.REGRET_INTERVAL
        assert minmax_budgeted.pairing == Pairing.MINMAX_BUDGETED
        assert two_stage_discrete.pairing == Pairing.TWO_STAGE_DISCRETE

    def test_cardinality(self):
        """Test p must lie in 1..n."""
        with pytest.raises(ValidationError, match="1 <= p <= n"):
            ProblemInstance(n=2, p=3, criterion="MinMax", uncertainty={"kind": "discrete", "scenarios": [(1, 2)]})

    def test_item_count_mismatch(self):
        """Test the uncertainty set must have n items."""
        with pytest.raises(ValidationError, match="expected n=3"):
            ProblemInstance(n=3, p=1, criterion="MinMax", uncertainty={"kind": "discrete", "scenarios": [(1, 2)]})

    def test_first_stage_required(self):
        """Test staged criteria need first-stage costs."""
        with pytest.raises(ValidationError, match="need first_stage_costs"):
            ProblemInstance(n=2, p=1, criterion="TwoStage", uncertainty={"kind": "discrete", "scenarios": [(1, 2)]})

    def test_first_stage_refused(self):
        """Test single-stage criteria take no first-stage costs."""
        with pytest.raises(ValidationError, match="take no first_stage_costs"):
            ProblemInstance(
                n=2, p=1, criterion="MinMax", first_stage_costs=(1, 1),
                uncertainty={"kind": "discrete", "scenarios": [(1, 2)]},
            )

    def test_unsupported_pairing(self):
        """Test regret over a budgeted set is not a supported pairing."""
        with pytest.raises(ValidationError, match="unsupported pairing"):
            ProblemInstance(
                n=2, p=1, criterion="MinMaxRegret",
                uncertainty={"kind": "budgeted", "lower": (1, 1), "deviation": (1, 1), "gamma": 1},
            )

    def test_recoverable_defaults(self, valid_recoverable_data):
        """Test discrete recoverable instances read Δ as kept items."""
        inst = ProblemInstance(**valid_recoverable_data)
        assert inst.delta_semantics == DeltaSemantics.KEPT_AT_LEAST
        assert inst.kept_min == 1

    def test_recoverable_changed_at_most(self, valid_recoverable_data):
        """Test ChangedAtMost keeps p − Δ items."""
        inst = ProblemInstance(**valid_recoverable_data, delta_semantics="ChangedAtMost")
        assert inst.kept_min == 1
        inst = inst.replace(delta=0)
        assert inst.kept_min == 2

    def test_recoverable_budgeted_default(self, valid_recoverable_data):
        """Test budgeted recoverable instances default to ChangedAtMost."""
        data = {
            **valid_recoverable_data,
            "uncertainty": {"kind": "budgeted", "lower": (1, 1, 1, 1), "deviation": (1, 2, 3, 4), "gamma": 2},
        }
        assert ProblemInstance(**data).delta_semantics == DeltaSemantics.CHANGED_AT_MOST

    def test_delta_range(self, valid_recoverable_data):
        """Test Δ must lie in 0..p."""
        with pytest.raises(ValidationError, match="0 <= delta <= p"):
            ProblemInstance(**{**valid_recoverable_data, "delta": 3})

    def test_delta_only_for_recoverable(self):
        """Test other criteria refuse Δ."""
        with pytest.raises(ValidationError, match="only meaningful for Recoverable"):
            ProblemInstance(
                n=2, p=1, criterion="MinMax", delta=1, uncertainty={"kind": "discrete", "scenarios": [(1, 2)]}
            )

    def test_kept_min_only_for_recoverable(self, minmax_discrete):
        """Test kept_min is undefined elsewhere."""
        with pytest.raises(ValueError):
            minmax_discrete.kept_min

    def test_replace_revalidates(self, minmax_discrete):
        """Test replace builds a new validated instance."""
        copy = minmax_discrete.replace(p=1)
        assert copy.p == 1
        assert minmax_discrete.p == 2
        with pytest.raises(ValidationError):
            minmax_discrete.replace(p=5)


class TestSelectionSolution:
    """Tests for SelectionSolution."""

    def test_from_items(self):
        """Test 0-based items become indicators."""
        x = SelectionSolution.from_items([0, 3], n=4, p=2)
        assert x.chosen == (1, 0, 0, 1)
        assert x.support == (0, 3)
        assert x.size == 2
        assert x.describe() == "{1,4}"

    def test_full_needs_exactly_p(self):
        """Test a full solution selects exactly p items."""
        with pytest.raises(ValidationError, match="exactly p=2"):
            SelectionSolution(chosen=(1, 0, 0), p=2)

    def test_partial_allows_fewer(self):
        """Test a first-stage solution may select fewer than p items."""
        x = SelectionSolution(chosen=(0, 0, 0), p=2, role=SolutionRole.PARTIAL_FIRST_STAGE)
        assert x.size == 0
        with pytest.raises(ValidationError, match="at most p=2"):
            SelectionSolution(chosen=(1, 1, 1), p=2, role=SolutionRole.PARTIAL_FIRST_STAGE)

    def test_indicators(self):
        """Test entries other than 0 and 1 are refused."""
        with pytest.raises(ValidationError, match=r"chosen\[2\] must be 0 or 1"):
            SelectionSolution(chosen=(1, 2), p=1)
