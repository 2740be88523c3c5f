"""Unit tests for manifest parsing."""

import pytest

from robust_selection_bench.errors import ParseError
from robust_selection_bench.io import format_manifest, parse_manifest
from robust_selection_bench.schemas import BudgetMode, Criterion


class TestParseManifest:
    """Tests for parse_manifest."""

    def test_minimal(self):
        """Criterion, uncertainty and hash are enough; comments and blanks are skipped."""
        text = "# written by hand\n\ncriterion=MinMax\nuncertainty=budgeted\nbudget_mode=VariableBudget\nhash=sha256:00\n"
        manifest = parse_manifest(text)
        assert manifest.criterion == Criterion.MIN_MAX
        assert manifest.budget_mode == BudgetMode.VARIABLE_BUDGET
        assert not manifest.sampled

    def test_round_trip_text(self):
        """format_manifest writes keys in a fixed order that parse_manifest accepts."""
        text = "criterion=TwoStage\nuncertainty=discrete\ngenerator=2ST-D-1\nseed=4\nhash=sha256:ff\n"
        manifest = parse_manifest(text)
        assert manifest.sampled
        assert format_manifest(manifest) == "format=robust-selection-bench/1\n" + text

    @pytest.mark.parametrize(
        "text,message",
        [
            ("criterion=MinMax\nhash=sha256:00\n", "missing required key"),
            ("criterion=MinMax\ncriterion=MinMax\n", "duplicate key"),
            ("criterion MinMax\n", "expected key=value"),
            ("format=other/2\ncriterion=MinMax\nuncertainty=discrete\nhash=x\n", "unsupported manifest format"),
            ("criterion=Sometimes\nuncertainty=discrete\nhash=x\n", "criterion"),
        ],
    )
    def test_malformed(self, text, message):
        """Malformed manifests raise ParseError."""
        with pytest.raises(ParseError, match=message):
            parse_manifest(text)
