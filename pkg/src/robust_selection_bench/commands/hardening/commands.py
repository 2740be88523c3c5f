"""Hardening command."""

import argparse
import logging
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError

from robust_selection_bench.commands import command, register_commands
from robust_selection_bench.commands.arguments import add_instance_hints, rational, read_instance_from
from robust_selection_bench.config import hiro_defaults_from, solver_config_from
from robust_selection_bench.core import evaluate_robust
from robust_selection_bench.errors import handle_validation_error
from robust_selection_bench.formulations import solve_robust
from robust_selection_bench.hiro import default_mode, harden
from robust_selection_bench.io import write_instance
from robust_selection_bench.schemas import HiroConfig, HiroMode, format_rational

logger = logging.getLogger(__name__)


def _hiro_cfg(args: argparse.Namespace, config: Dict[str, Any]) -> HiroConfig:
    values = hiro_defaults_from(config)
    for key in ("c_max", "max_iterations", "time_limit"):
        if getattr(args, key) is not None:
            values[key] = getattr(args, key)
    try:
        return HiroConfig(b=args.b, mode=args.mode, solver_cfg=solver_config_from(config), **values)
    except ValidationError as e:
        raise handle_validation_error(e, "hardening options")


def hardened_name(path: Path, b, mode: HiroMode) -> str:
    """``inst.csv`` hardened with b=2, mode Both -> ``inst-h2-Both.csv``."""
    return f"{path.stem}-h{format_rational(b).replace('/', '_')}-{mode.value}{path.suffix or '.csv'}"


@command("harden", help="Perturb instances within a budget-b neighborhood to raise their robust optimum")
def harden_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Write one hardened file (plus manifest) per input and report both optima."""
    cfg = _hiro_cfg(args, config)
    for name in args.paths:
        path = Path(name)
        inst = read_instance_from(args, path)
        hardened, trace = harden(inst, cfg)
        mode = cfg.mode or default_mode(inst.pairing)
        outdir = Path(args.out) if args.out else path.parent
        outdir.mkdir(parents=True, exist_ok=True)
        target, _ = write_instance(hardened, outdir / hardened_name(path, cfg.b, mode))

        if trace is not None:
            before, after = format_rational(trace.input_value), format_rational(trace.best_value)
            rounds = f", {len(trace.iterations)} rounds, converged={trace.converged}"
        else:
            before = _optimum(inst, cfg)
            after = _optimum(hardened, cfg)
            rounds = ""
        print(f"{target}: robust optimum {before} -> {after}{rounds}")
    return 0


def _optimum(inst, cfg: HiroConfig) -> str:
    solution, result, _ = solve_robust(inst, cfg.solver_cfg)
    if solution is None:
        return f"? ({result.status.value})"
    return format_rational(evaluate_robust(solution, inst).objective)


def register(subparsers) -> None:
    """Register the hardening command with the CLI parser.

    Args:
        subparsers: The action returned by ``add_subparsers``
    """
    parsers = register_commands(subparsers, [harden_command])

    harden_parser = parsers["harden"]
    harden_parser.add_argument("paths", nargs="+", help="Instance files")
    harden_parser.add_argument("--b", type=rational, required=True, help="Perturbation budget per coefficient")
    harden_parser.add_argument("--mode", choices=[m.value for m in HiroMode], help="Perturbed vectors")
    harden_parser.add_argument("--c-max", type=rational, help="Cost cap (default from config: 100)")
    harden_parser.add_argument("--time-limit", type=float, help="Wall-clock limit of a run in seconds")
    harden_parser.add_argument("--max-iterations", type=int, help="Master/sub rounds")
    harden_parser.add_argument("--out", help="Output directory (default: next to the input)")
    add_instance_hints(harden_parser)
