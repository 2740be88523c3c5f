"""Benchmark command."""

import argparse
import json
import logging
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError

from robust_selection_bench.bench import (
    expected_record_count,
    preset_config,
    preset_rows,
    run_experiment,
    summary_path,
    write_summary,
)
from robust_selection_bench.commands import UsageError, command, register_commands
from robust_selection_bench.errors import ParameterError, handle_validation_error
from robust_selection_bench.io import write_results
from robust_selection_bench.io.files import read_bytes
from robust_selection_bench.schemas import ExperimentConfig

logger = logging.getLogger(__name__)


def load_experiment(path, overrides: Dict[str, Any]) -> ExperimentConfig:
    """ExperimentConfig from a JSON file, with command-line overrides applied.

    Raises:
        ParameterError: If the file is not JSON or does not describe a valid config
    """
    try:
        data = json.loads(read_bytes(path).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParameterError(f"{path}: not a JSON experiment config: {e}")
    if not isinstance(data, dict):
        raise ParameterError(f"{path}: an experiment config is a JSON object")
    data.update(overrides)
    try:
        return ExperimentConfig(**data)
    except ValidationError as e:
        raise handle_validation_error(e, f"experiment config {path}")


def _format_presets() -> str:
    rows = preset_rows()
    columns = ("id", "generators", "tuples", "hiro_b", "description")
    widths = {c: max(len(c), *(len(row[c]) for row in rows)) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns).rstrip()]
    lines += ["  ".join(row[c].ljust(widths[c]) for c in columns).rstrip() for row in rows]
    return "\n".join(lines)


@command("bench", help="Run an experiment grid and write the results and summary CSVs")
def bench_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    if args.list_presets:
        print(_format_presets())
        return 0
    if (args.config is None) == (args.preset is None):
        raise UsageError("give exactly one of --config and --preset")

    section = config.get("bench", {})
    workers = args.workers or section.get("workers", 1)
    if args.config:
        overrides = {"workers": workers}
        if args.seeds is not None:
            overrides["seeds_per_cell"] = args.seeds
        if args.scale is not None:
            overrides["scale"] = args.scale
        if args.time_limit is not None:
            overrides["time_limit"] = args.time_limit
        cfg = load_experiment(args.config, overrides)
    else:
        seeds = args.seeds if args.seeds is not None else (None if args.full else section.get("seeds_per_cell"))
        cfg = preset_config(
            args.preset,
            scale=args.scale or 1.0,
            full=args.full,
            seeds_per_cell=seeds,
            time_limit=args.time_limit,
            desk_max_n=section.get("desk_max_n", 30),
            workers=workers,
        )

    results = Path(args.out or f"{cfg.name}.csv")
    instances = Path(args.instances) if args.instances else results.parent / f"{results.stem}-instances"
    logger.info(f"Running {cfg.name}: {expected_record_count(cfg)} records expected")
    records = run_experiment(cfg, outdir=instances)
    write_results(records, results)
    write_summary(records, summary_path(results))
    failed = sum(1 for r in records if r.error is not None)
    print(f"{len(records)} records -> {results} ({failed} failed)")
    return 0


def register(subparsers) -> None:
    """Register the benchmark command with the CLI parser.

    Args:
        subparsers: The action returned by ``add_subparsers``
    """
    parsers = register_commands(subparsers, [bench_command])

    bench = parsers["bench"]
    bench.add_argument("--config", help="JSON experiment config")
    bench.add_argument("--preset", help="Preset id (see --list-presets)")
    bench.add_argument("--list-presets", action="store_true", help="Print the presets and exit")
    bench.add_argument("--scale", type=float, help="Shrink sizes and time limits by this factor")
    bench.add_argument("--full", action="store_true", help="Full-size preset: 600 s limits, 50 seeds per cell")
    bench.add_argument("--seeds", type=int, help="Seeds per cell")
    bench.add_argument("--time-limit", type=float, help="Solver time limit per instance")
    bench.add_argument("--workers", type=int, help="Parallel worker processes")
    bench.add_argument("--out", help="Results CSV (default: <name>.csv)")
    bench.add_argument("--instances", help="Directory for instance files (default: <results>-instances)")
