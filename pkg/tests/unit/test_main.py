"""Unit tests for the command line entry points.

These tests drive cli_dispatch with real files and check exit codes and output.
"""

import pytest

from robust_selection_bench import __main__, cli_dispatch
from robust_selection_bench.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from robust_selection_bench.io import write_instance


@pytest.fixture
def instance_file(tmp_path, minmax_discrete):
    path, _ = write_instance(minmax_discrete, tmp_path / "mmd.csv")
    return path


class TestMain:
    """Tests for the __main__ module."""

    def test_main_exits_with_dispatch_code(self, monkeypatch):
        """Test that main passes argv through and exits with the returned code."""
        seen = []
        monkeypatch.setattr("sys.argv", ["robust-selection-bench", "gen", "--list"])
        monkeypatch.setattr(__main__, "cli_dispatch", lambda argv: seen.append(argv) or 0)

        with pytest.raises(SystemExit) as exc_info:
            __main__.main()

        assert exc_info.value.code == 0
        assert seen == [["gen", "--list"]]


class TestCliDispatch:
    """Tests for exit codes and the output of the subcommands."""

    def test_version(self, capsys):
        """Test --version exits 0."""
        assert cli_dispatch(["--version"]) == EXIT_OK
        assert "robust-selection-bench" in capsys.readouterr().out

    def test_no_command(self, capsys):
        """Test a missing subcommand is a usage error."""
        assert cli_dispatch([]) == EXIT_USAGE
        assert "usage:" in capsys.readouterr().err

    def test_unknown_flag(self):
        """Test argparse errors map to exit code 1."""
        assert cli_dispatch(["solve", "--no-such-flag", "x.csv"]) == EXIT_USAGE

    def test_missing_conditional_option(self, capsys):
        """Test gen without --n and --p reports a usage error."""
        assert cli_dispatch(["gen", "--generator", "MM-D-U"]) == EXIT_USAGE
        assert "gen: error:" in capsys.readouterr().err

    def test_disabled_group(self, monkeypatch):
        """Test a subcommand of a disabled group is unknown."""
        monkeypatch.setenv("ROBSEL_ENABLE_SOLVING", "false")
        assert cli_dispatch(["solve", "x.csv"]) == EXIT_USAGE

    def test_gen_list(self, capsys):
        """Test the catalog lists every generator."""
        assert cli_dispatch(["gen", "--list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "MM-D-U" in out
        assert "RR-CB-U" in out

    def test_gen_then_validate(self, tmp_path, capsys):
        """Test sampled files validate cleanly."""
        args = ["gen", "--generator", "MM-D-1", "--n", "6", "--p", "3", "--N", "4",
                "--seed", "11", "--count", "2", "--out", str(tmp_path)]
        assert cli_dispatch(args) == EXIT_OK
        paths = capsys.readouterr().out.split()
        assert len(paths) == 2
        assert paths[0].endswith("MM-D-1-n6-p3-N4-s11.csv")

        assert cli_dispatch(["validate", *paths]) == EXIT_OK
        assert capsys.readouterr().out.count("OK ") == 2

    def test_validate_corrupted_file(self, instance_file, capsys):
        """Test a file edited after writing fails its manifest check."""
        instance_file.write_bytes(instance_file.read_bytes().replace(b"1,5,3,4", b"1,5,3,9"))

        assert cli_dispatch(["validate", str(instance_file)]) == EXIT_FAILURE
        assert "Integrity Error" in capsys.readouterr().out

    def test_solve(self, instance_file, tmp_path, capsys):
        """Test solve prints the optimum and writes the solution file."""
        solution = tmp_path / "mmd.sol"
        assert cli_dispatch(["solve", str(instance_file), "--solution-out", str(solution)]) == EXIT_OK

        out = capsys.readouterr().out
        assert "status: Optimal" in out
        assert "objective: 5" in out
        assert "items: 1,4" in out
        assert solution.read_text() == "1,0,0,1\n"

    def test_eval(self, instance_file, tmp_path, capsys):
        """Test eval reports the value and worst scenario of a solution file."""
        solution = tmp_path / "mmd.sol"
        solution.write_text("0,1,1,0\n")

        assert cli_dispatch(["eval", str(instance_file), str(solution)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "objective: 8" in out
        assert "worst scenario: 1" in out

    def test_eval_wrong_cardinality(self, instance_file, tmp_path, capsys):
        """Test a solution with the wrong number of items is a runtime failure."""
        solution = tmp_path / "mmd.sol"
        solution.write_text("1,1,1,0\n")

        assert cli_dispatch(["eval", str(instance_file), str(solution)]) == EXIT_FAILURE
        assert "Cardinality Error" in capsys.readouterr().err

    def test_oracle(self, instance_file, capsys):
        """Test the brute-force oracle agrees with solve."""
        assert cli_dispatch(["oracle", str(instance_file)]) == EXIT_OK
        assert "objective: 5" in capsys.readouterr().out

    def test_oracle_size_guard(self, instance_file, capsys):
        """Test the size guard is reported as a runtime failure."""
        assert cli_dispatch(["oracle", str(instance_file), "--max-n", "3"]) == EXIT_FAILURE
        assert "Instance Too Large" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable path is a runtime failure."""
        assert cli_dispatch(["solve", str(tmp_path / "absent.csv")]) == EXIT_FAILURE
        assert "absent.csv" in capsys.readouterr().err

    def test_harden(self, tmp_path, hiro_minmax, capsys):
        """Test harden writes the perturbed instance next to the input."""
        path, _ = write_instance(hiro_minmax, tmp_path / "h.csv")

        assert cli_dispatch(["harden", str(path), "--b", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "robust optimum 5 -> 6" in out
        hardened = [p for p in tmp_path.glob("h-h1-*.csv")]
        assert len(hardened) == 1
        assert cli_dispatch(["validate", str(hardened[0])]) == EXIT_OK
