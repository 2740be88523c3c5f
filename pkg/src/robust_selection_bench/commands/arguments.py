"""Argument groups and conversions shared by several command groups."""

import argparse
from fractions import Fraction
from typing import Any, Dict

from pydantic import ValidationError

from robust_selection_bench.commands import UsageError
from robust_selection_bench.config import solver_config_from
from robust_selection_bench.errors import handle_validation_error
from robust_selection_bench.io import read_instance
from robust_selection_bench.schemas import (
    BudgetMode,
    Criterion,
    DeltaSemantics,
    ProblemInstance,
    SolutionRole,
    SolverConfig,
)


def rational(text: str) -> Fraction:
    """argparse type for integers and a/b rationals."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def add_instance_hints(parser: argparse.ArgumentParser) -> None:
    """Options that resolve the layout of a file without a manifest."""
    hints = parser.add_argument_group("layout hints (files without a manifest)")
    hints.add_argument("--criterion", choices=[c.value for c in Criterion], help="Robustness criterion")
    hints.add_argument("--budget-mode", choices=[m.value for m in BudgetMode], help="Budget interpretation")
    hints.add_argument("--delta-semantics", choices=[s.value for s in DeltaSemantics], help="Reading of Δ")


def add_solver_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--time-limit", type=float, help="Solver time limit in seconds")
    parser.add_argument("--node-limit", type=int, help="Branch-and-bound node limit")


def read_instance_from(args: argparse.Namespace, path) -> ProblemInstance:
    return read_instance(
        path,
        criterion=getattr(args, "criterion", None),
        budget_mode=getattr(args, "budget_mode", None),
        delta_semantics=getattr(args, "delta_semantics", None),
    )


def solver_cfg_from_args(args: argparse.Namespace, config: Dict[str, Any]) -> SolverConfig:
    """Configured solver defaults with the command-line limits applied."""
    try:
        cfg = solver_config_from(config)
        updates = {}
        if getattr(args, "time_limit", None) is not None:
            updates["time_limit"] = args.time_limit
        if getattr(args, "node_limit", None) is not None:
            updates["node_limit"] = args.node_limit
        return SolverConfig(**{**cfg.model_dump(), **updates})
    except ValidationError as e:
        raise handle_validation_error(e, "solver limits")


def solution_role(inst: ProblemInstance) -> SolutionRole:
    """Role of the x a solution file holds for this instance."""
    if inst.criterion == Criterion.TWO_STAGE:
        return SolutionRole.PARTIAL_FIRST_STAGE
    return SolutionRole.FULL


def require(args: argparse.Namespace, *names: str) -> None:
    """Usage check for options that are only mandatory in some forms of a command.

    Raises:
        UsageError: If any of them is missing
    """
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")
