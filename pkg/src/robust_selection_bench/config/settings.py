"""Configuration settings for robust-selection-bench.

This module handles loading configuration from files and environment variables:
command group enablement for the CLI plus solver, hardening, benchmark and
logging defaults.
"""

import os
import json
import logging
from pathlib import Path
from typing import Dict, Any

from robust_selection_bench.utils.environment import get_bool_env_var, get_float_env_var

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "ROBSEL_CONFIG"
ENV_PREFIX = "ROBSEL_"

DEFAULT_CONFIG = {
    "command_groups": {
        "instances": {"enabled": True},
        "solving": {"enabled": True},
        "hardening": {"enabled": True},
        "benchmarking": {"enabled": True},
    },
    "solver": {
        "time_limit": 10.0,
        "node_limit": 1_000_000,
        "feasibility_tol": 1e-7,
        "integrality_tol": 1e-6,
        "branching": "MostFractional",
        "stall_threshold": 1000,
        "exact_check_max_nonzeros": 5000,
    },
    "hiro": {
        "c_max": 100,
        "max_iterations": 50,
        "time_limit": 60.0,
    },
    "bench": {
        "seeds_per_cell": 5,
        "workers": 1,
        "desk_max_n": 30,
    },
    "logging": {
        "level": "WARNING",
        "file": None,
    },
}


def _merge(config: Dict[str, Any], file_config: Dict[str, Any]) -> None:
    for key, value in file_config.items():
        if key == "command_groups" and isinstance(value, dict):
            for group, settings in value.items():
                if group in config["command_groups"]:
                    config["command_groups"][group].update(settings)
                else:
                    config["command_groups"][group] = settings
        elif isinstance(value, dict) and isinstance(config.get(key), dict):
            config[key].update(value)
        else:
            config[key] = value


def load_config() -> Dict[str, Any]:
    """Load configuration from file and environment variables.

    Configuration is loaded in the following order of precedence:
    1. Default configuration
    2. Configuration file (if specified via ROBSEL_CONFIG env var)
    3. Environment variables (ROBSEL_ENABLE_*, ROBSEL_TIME_LIMIT, ROBSEL_LOG_LEVEL)

    Returns:
        Dict[str, Any]: The merged configuration
    """
    config = json.loads(json.dumps(DEFAULT_CONFIG))

    config_path = os.environ.get(CONFIG_ENV_VAR)
    if config_path and Path(config_path).exists():
        try:
            with open(config_path, "r") as f:
                file_config = json.load(f)
                logger.debug(f"Loaded configuration from {config_path}")
            _merge(config, file_config)
        except Exception as e:
            logger.error(f"Failed to load configuration from {config_path}: {e}")
            config = json.loads(json.dumps(DEFAULT_CONFIG))

    for group in config["command_groups"]:
        env_var = f"{ENV_PREFIX}ENABLE_{group.upper()}"
        if env_var in os.environ:
            try:
                enabled = get_bool_env_var(env_var)
            except ValueError as e:
                logger.warning(f"Ignoring {env_var}: {e}")
                continue
            config["command_groups"][group]["enabled"] = enabled
            logger.debug(f"Setting {group} command group enabled={enabled} from environment variable")

    time_limit_var = f"{ENV_PREFIX}TIME_LIMIT"
    if time_limit_var in os.environ:
        try:
            config["solver"]["time_limit"] = get_float_env_var(time_limit_var)
        except ValueError as e:
            logger.warning(f"Ignoring {time_limit_var}: {e}")

    level_var = f"{ENV_PREFIX}LOG_LEVEL"
    if level_var in os.environ:
        config["logging"]["level"] = os.environ[level_var].upper()

    return config


def solver_config_from(config: Dict[str, Any]):
    """Build a SolverConfig from the ``solver`` section of a merged config."""
    from robust_selection_bench.schemas.solver import SolverConfig

    return SolverConfig(**config.get("solver", {}))


def hiro_defaults_from(config: Dict[str, Any]) -> Dict[str, Any]:
    """Keyword defaults for HiroConfig taken from the ``hiro`` section."""
    section = config.get("hiro", {})
    return {
        "c_max": section.get("c_max", 100),
        "max_iterations": section.get("max_iterations", 50),
        "time_limit": section.get("time_limit", 60.0),
    }
