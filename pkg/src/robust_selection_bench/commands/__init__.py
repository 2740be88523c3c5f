"""Command registration system for the robust-selection-bench CLI.

This module provides a decorator-based command registry that allows
subcommands to be organized into logical groups and loaded dynamically based
on configuration.
"""

import argparse
import importlib
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Set

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Command line that parses but cannot be run as given (exit code 1)."""


Handler = Callable[[argparse.Namespace, Dict[str, Any]], int]


@dataclass(frozen=True)
class CommandSpec:
    name: str
    help: str
    handler: Handler


# Registry of every decorated command, by subcommand name
_command_registry: Dict[str, CommandSpec] = {}
_registered_modules: Set[str] = set()


def command(name: str, help: str):
    """Decorator to register a function as a CLI subcommand.

    The handler receives the parsed arguments and the merged configuration
    and returns the process exit code.

    Example:
        @command("solve", help="Solve an instance file")
        def solve_command(args, config) -> int:
            ...

    Returns:
        Function decorator that registers the decorated function
    """

    def decorator(func: Handler) -> Handler:
        logger.debug(f"Registering command: {name}")
        _command_registry[name] = CommandSpec(name, help, func)
        return func

    return decorator


def get_command(name: str) -> CommandSpec:
    return _command_registry[name]


def register_commands(subparsers, handlers: List[Handler]) -> Dict[str, argparse.ArgumentParser]:
    """Add a sub-parser per handler and bind the handler to it.

    Args:
        subparsers: The action returned by ``add_subparsers``
        handlers: Decorated command functions

    Returns:
        The new sub-parsers by command name, for adding arguments
    """
    parsers = {}
    for handler in handlers:
        spec = next(s for s in _command_registry.values() if s.handler is handler)
        parser = subparsers.add_parser(spec.name, help=spec.help, description=spec.help)
        parser.set_defaults(handler=handler, command=spec.name, print_usage=parser.print_usage)
        parsers[spec.name] = parser
        logger.debug(f"Registered subcommand: {spec.name}")
    return parsers


def load_commands(subparsers, config: Dict[str, Any]) -> List[str]:
    """Load and register command groups based on configuration.

    This function dynamically imports command group modules based on the
    ``command_groups`` section and lets each add its sub-parsers.

    Args:
        subparsers: The action returned by ``add_subparsers``
        config: Configuration dictionary with command groups

    Returns:
        Names of the loaded groups
    """
    loaded = []

    for group_name, group_config in config.get("command_groups", {}).items():
        if not group_config.get("enabled", False):
            logger.debug(f"Command group '{group_name}' is disabled")
            continue

        logger.debug(f"Loading command group: {group_name}")
        try:
            module_path = f"robust_selection_bench.commands.{group_name}"
            module = importlib.import_module(module_path)

            if hasattr(module, "register"):
                module.register(subparsers)
                _registered_modules.add(module_path)
                loaded.append(group_name)
            else:
                logger.warning(f"No register function found in {module_path}")
        except ImportError as e:
            logger.error(f"Failed to import command group '{group_name}': {e}")

    logger.debug(f"Loaded {len(loaded)} command groups")

    if not loaded:
        logger.warning("No command groups were loaded! Check your configuration.")
    return loaded
