"""Unit tests for configuration settings module.

These tests use real environment variables and real files to test the
configuration loading functionality with no mocks.
"""

import os
import json
import tempfile

import pytest
from robust_selection_bench.config.settings import (
    DEFAULT_CONFIG,
    hiro_defaults_from,
    load_config,
    solver_config_from,
)


@pytest.fixture
def temp_config_file():
    """Fixture that creates a temporary config file.

    Returns:
        Path to temporary file
    """
    fd, path = tempfile.mkstemp(suffix=".json")
    os.close(fd)

    yield path

    if os.path.exists(path):
        os.unlink(path)


class TestConfigSettings:
    """Tests for the configuration settings module."""

    def test_default_configuration(self):
        """Test loading the default configuration with no file or overrides."""
        config = load_config()

        assert config == DEFAULT_CONFIG
        assert config is not DEFAULT_CONFIG
        for group in ("instances", "solving", "hardening", "benchmarking"):
            assert config["command_groups"][group]["enabled"] is True

    def test_returned_config_is_a_copy(self):
        """Test mutating the loaded config leaves the defaults alone."""
        config = load_config()
        config["solver"]["time_limit"] = 1.0
        assert DEFAULT_CONFIG["solver"]["time_limit"] == 10.0

    def test_config_file_loading(self, temp_config_file, monkeypatch):
        """Test sections in the file are merged over the defaults."""
        with open(temp_config_file, "w") as f:
            json.dump({
                "command_groups": {"hardening": {"enabled": False}},
                "solver": {"time_limit": 2.5},
                "bench": {"workers": 4},
            }, f)
        monkeypatch.setenv("ROBSEL_CONFIG", temp_config_file)

        config = load_config()

        assert config["command_groups"]["hardening"]["enabled"] is False
        assert config["command_groups"]["solving"]["enabled"] is True
        assert config["solver"]["time_limit"] == 2.5
        assert config["solver"]["node_limit"] == 1_000_000
        assert config["bench"]["workers"] == 4
        assert config["bench"]["seeds_per_cell"] == 5

    def test_invalid_config_file_falls_back_to_defaults(self, temp_config_file, monkeypatch):
        """Test a file that is not JSON is ignored."""
        with open(temp_config_file, "w") as f:
            f.write("{ not json")
        monkeypatch.setenv("ROBSEL_CONFIG", temp_config_file)

        assert load_config() == DEFAULT_CONFIG

    def test_missing_config_file_is_ignored(self, monkeypatch):
        """Test a path that does not exist is ignored."""
        monkeypatch.setenv("ROBSEL_CONFIG", "/nonexistent/robsel.json")
        assert load_config() == DEFAULT_CONFIG

    def test_environment_variable_override(self, monkeypatch):
        """Test ROBSEL_ENABLE_* toggles command groups."""
        monkeypatch.setenv("ROBSEL_ENABLE_BENCHMARKING", "false")
        monkeypatch.setenv("ROBSEL_ENABLE_INSTANCES", "yes")

        config = load_config()

        assert config["command_groups"]["benchmarking"]["enabled"] is False
        assert config["command_groups"]["instances"]["enabled"] is True

    def test_environment_overrides_file(self, temp_config_file, monkeypatch):
        """Test environment variables take precedence over the file."""
        with open(temp_config_file, "w") as f:
            json.dump({"command_groups": {"solving": {"enabled": False}}}, f)
        monkeypatch.setenv("ROBSEL_CONFIG", temp_config_file)
        monkeypatch.setenv("ROBSEL_ENABLE_SOLVING", "1")

        assert load_config()["command_groups"]["solving"]["enabled"] is True

    def test_invalid_boolean_is_ignored(self, monkeypatch):
        """Test an unreadable toggle keeps the previous value."""
        monkeypatch.setenv("ROBSEL_ENABLE_SOLVING", "sometimes")
        assert load_config()["command_groups"]["solving"]["enabled"] is True

    def test_time_limit_and_log_level(self, monkeypatch):
        """Test the solver time limit and log level overrides."""
        monkeypatch.setenv("ROBSEL_TIME_LIMIT", "0.5")
        monkeypatch.setenv("ROBSEL_LOG_LEVEL", "debug")

        config = load_config()

        assert config["solver"]["time_limit"] == 0.5
        assert config["logging"]["level"] == "DEBUG"

    def test_invalid_time_limit_is_ignored(self, monkeypatch):
        """Test a non-numeric time limit keeps the default."""
        monkeypatch.setenv("ROBSEL_TIME_LIMIT", "soon")
        assert load_config()["solver"]["time_limit"] == 10.0


class TestSectionHelpers:
    """Tests for the helpers that turn config sections into schema inputs."""

    def test_solver_config_from(self):
        """Test the solver section becomes a SolverConfig."""
        cfg = solver_config_from(load_config())
        assert cfg.time_limit == 10.0
        assert cfg.node_limit == 1_000_000

    def test_hiro_defaults_from(self):
        """Test the hiro section supplies HiroConfig keywords."""
        assert hiro_defaults_from(load_config()) == {"c_max": 100, "max_iterations": 50, "time_limit": 60.0}

    def test_hiro_defaults_from_empty(self):
        """Test missing sections fall back to built-in values."""
        assert hiro_defaults_from({})["c_max"] == 100
