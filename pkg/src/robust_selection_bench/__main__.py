"""Entry point for robust-selection-bench.

This module provides the main entry point for running the command line tool.
"""

import sys

from robust_selection_bench.cli import cli_dispatch


def main():
    """Run the robust-selection-bench CLI."""
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
