"""Unit tests for the model builder, structural validation and the LP dump."""

from fractions import Fraction

import pytest

from robust_selection_bench.errors import ModelDefectError
from robust_selection_bench.milp import (
    Constraint,
    MilpModel,
    ModelBuilder,
    Relation,
    Sense,
    Variable,
    VariableKind,
    check_model,
    dump_lp,
    format_lp,
    validate_model,
)


@pytest.fixture
def knapsack():
    builder = ModelBuilder("pick_one")
    a = builder.add_binary("a")
    b = builder.add_binary("b")
    builder.add_constraint({a: 1, b: 1}, Relation.LE, 1, name="one")
    builder.set_objective({a: 5, b: 4}, Sense.MAX)
    return builder.build()


class TestModelBuilder:
    """Tests for ModelBuilder."""

    def test_columns_and_bounds(self):
        """Continuous, free and binary columns get their documented bounds."""
        builder = ModelBuilder()
        x = builder.add_continuous("x", upper=10)
        f = builder.add_free("f")
        z = builder.add_binary("z")
        model = builder.build()
        assert model.variables[x] == Variable("x", VariableKind.CONTINUOUS, Fraction(0), Fraction(10))
        assert model.variables[f].lower is None
        assert model.variables[z].is_binary
        assert model.binaries == (z,)

    def test_repeated_coefficients_are_merged(self):
        """Repeated indices are summed and zeros dropped."""
        builder = ModelBuilder()
        x = builder.add_continuous("x")
        y = builder.add_continuous("y")
        builder.add_constraint([(x, 1), (y, 2), (x, "1/2"), (y, -2)], Relation.GE, 1, name="row")
        (row,) = builder.build().constraints
        assert row.coefficients == ((x, Fraction(3, 2)),)

    def test_fix_sets_both_bounds(self):
        """fix pins a column through its bounds."""
        builder = ModelBuilder()
        x = builder.add_continuous("x", upper=5)
        builder.fix(x, 2)
        var = builder.build().variables[x]
        assert var.lower == var.upper == 2

    def test_objective_value(self, knapsack):
        """Objectives are evaluated exactly by name."""
        assert knapsack.objective_value({"a": 1, "b": 0}) == 5
        assert knapsack.variable_index("b") == 1
        with pytest.raises(KeyError):
            knapsack.variable_index("c")


class TestValidateModel:
    """Tests for validate_model and check_model."""

    def test_well_formed(self, knapsack):
        """A built model has no defects."""
        assert validate_model(knapsack) == []
        check_model(knapsack)

    def test_defects_are_listed(self):
        """Unknown columns, empty rows, duplicate names and bad bounds are all reported."""
        model = MilpModel(
            name="broken",
            variables=(
                Variable("x", lower=Fraction(2), upper=Fraction(1)),
                Variable("x", VariableKind.BINARY, Fraction(0), Fraction(2)),
            ),
            constraints=(
                Constraint("r", ((5, Fraction(1)),), Relation.LE, Fraction(1)),
                Constraint("r", (), Relation.LE, Fraction(1)),
            ),
        )
        defects = validate_model(model)
        assert any("duplicate variable" in d for d in defects)
        assert any("inverted bounds" in d for d in defects)
        assert any("outside [0, 1]" in d for d in defects)
        assert any("unknown variable index" in d for d in defects)
        assert any("empty constraint" in d for d in defects)
        assert any("duplicate constraint" in d for d in defects)
        with pytest.raises(ModelDefectError) as excinfo:
            check_model(model)
        assert excinfo.value.defects == defects


class TestFormatLp:
    """Tests for the LP-style dump."""

    def test_sections(self, knapsack):
        """Sections appear in grammar order with exact coefficients."""
        text = format_lp(knapsack)
        assert text.splitlines() == [
            "\\ pick_one",
            "Maximize",
            " obj: 5 a + 4 b",
            "Subject To",
            " one: 1 a + 1 b <= 1",
            "Bounds",
            "Binaries",
            " a b",
            "End",
        ]

    def test_free_bounds_and_fractions(self, tmp_path):
        """Missing bounds print as infinities and fractions as a/b."""
        builder = ModelBuilder("lp")
        f = builder.add_free("f")
        builder.add_constraint({f: Fraction(-1, 3)}, Relation.GE, -2, name="r")
        builder.set_objective({f: 1}, constant=Fraction(1, 2))
        path = dump_lp(builder.build(), tmp_path / "model.lp")
        text = path.read_text()
        assert " obj: 1 f + 1/2" in text
        assert " r: -1/3 f >= -2" in text
        assert " -inf <= f <= +inf" in text
