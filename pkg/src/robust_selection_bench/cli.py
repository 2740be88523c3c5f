"""Command line interface for robust-selection-bench.

Builds the argparse parser from the enabled command groups, configures
logging and maps command outcomes to exit codes: 0 on success, 1 for usage
errors and 2 for runtime failures.
"""

import argparse
import logging
import sys
import traceback
from pathlib import Path
from typing import Any, Dict, List, Optional

from robust_selection_bench.commands import UsageError, load_commands
from robust_selection_bench.config import load_config
from robust_selection_bench.errors import RobustSelectionError, format_error
from robust_selection_bench.version import VERSION

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


def configure_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """Log to stderr, and to ``log_file`` as well when given."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
    logger.debug("Logging initialized")


def _level(config: Dict[str, Any], verbosity: int) -> str:
    if verbosity >= 2:
        return "DEBUG"
    if verbosity == 1:
        return "INFO"
    return str(config.get("logging", {}).get("level", "WARNING")).upper()


def create_parser(config: Dict[str, Any]) -> argparse.ArgumentParser:
    """Top-level parser with one sub-parser per enabled command."""
    parser = argparse.ArgumentParser(
        prog="robust-selection-bench",
        description="Generate, harden, solve and benchmark robust selection instances",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-vv for debug)")
    parser.add_argument("--log-file", help="Also write the log to this file")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    loaded = load_commands(subparsers, config)
    logger.debug(f"Enabled command groups: {', '.join(loaded) or 'none'}")
    return parser


def cli_dispatch(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the selected command and return the exit code."""
    config = load_config()
    parser = create_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit 0; parse errors already printed the usage
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    configure_logging(_level(config, args.verbose), args.log_file or config.get("logging", {}).get("file"))
    if getattr(args, "handler", None) is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args, config)
    except UsageError as e:
        args.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RobustSelectionError as e:
        print(format_error(e), file=sys.stderr)
        return EXIT_FAILURE
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}")
        logger.error(traceback.format_exc())
        return EXIT_FAILURE
