"""Configuration package for robust-selection-bench."""

from .settings import load_config, DEFAULT_CONFIG, solver_config_from, hiro_defaults_from

__all__ = ["load_config", "DEFAULT_CONFIG", "solver_config_from", "hiro_defaults_from"]
