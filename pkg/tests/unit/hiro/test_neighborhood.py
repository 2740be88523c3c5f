"""Tests for perturbation neighborhoods."""

from fractions import Fraction

import pytest

from robust_selection_bench.errors import HiroError
from robust_selection_bench.hiro import PerturbationNeighborhood
from robust_selection_bench.milp import ModelBuilder, validate_model


class TestPerturbationNeighborhood:
    """Tests for PerturbationNeighborhood."""

    def test_bounds_clip_at_zero_and_cap(self):
        """Test the box stops at 0 and at c_max."""
        hood = PerturbationNeighborhood.around((0, 5, 100), 2)
        assert hood.lower_bounds == (0, 3, 98)
        assert hood.upper_bounds == (2, 7, 100)
        assert hood.cap == 105

    def test_center_is_a_member(self):
        """Test the input always lies in its own neighborhood."""
        hood = PerturbationNeighborhood.around((1, 9, 5), 1)
        assert hood.contains((1, 9, 5))

    def test_sum_cap(self):
        """Test raising every entry breaks the sum cap."""
        hood = PerturbationNeighborhood.around((1, 9, 5), 1)
        assert hood.contains((0, 9, 6))
        assert hood.violations((2, 10, 6)) == ["sum 18 exceeds cap 15"]

    def test_box_violation(self):
        """Test entries outside the box are reported one by one."""
        hood = PerturbationNeighborhood.around((1, 9, 5), 1)
        assert hood.violations((3, 9, 3)) == ["entry 1 = 3 outside [0, 2]", "entry 3 = 3 outside [4, 6]"]

    def test_wrong_length(self):
        """Test a vector of the wrong length is never a member."""
        hood = PerturbationNeighborhood.around((1, 2), 1)
        assert not hood.contains((1, 2, 3))

    def test_zero_budget_is_singleton(self):
        """Test b = 0 admits only the center."""
        hood = PerturbationNeighborhood.around((3, 4), 0)
        assert hood.is_singleton
        assert hood.lower_bounds == hood.upper_bounds == (3, 4)

    def test_center_above_cap(self):
        """Test an over-cap center is a hardening error."""
        with pytest.raises(HiroError, match="above the cost cap"):
            PerturbationNeighborhood.around((5, 120), 1, c_max=100)

    def test_project_snaps_and_clips(self):
        """Test solver floats are mapped onto exact members."""
        hood = PerturbationNeighborhood.around((1, 9, 5), 1)
        projected = hood.project([0.0, 8.9999999999, 6.0000000001])
        assert projected == (0, 9, 6)
        assert hood.contains(projected)

    def test_project_scales_down_excess(self):
        """Test a vector over the cap is pulled toward the lower bounds."""
        hood = PerturbationNeighborhood.around((2, 2), 1)
        projected = hood.project([3, 3], exact=True)
        assert projected == (Fraction(2), Fraction(2))
        assert hood.contains(projected)

    def test_add_to_builder(self):
        """Test columns carry the box and one sum-cap row is added."""
        hood = PerturbationNeighborhood.around((1, 9, 5), 1)
        builder = ModelBuilder("hood")
        columns = hood.add_to(builder, "c", 1)
        model = builder.build()

        assert len(columns) == 3
        assert [model.variables[j].upper for j in columns] == [2, 10, 6]
        assert len(model.constraints) == 1
        assert validate_model(model) == []
