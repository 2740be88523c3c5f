"""Instance commands: sampling new instances and validating instance files."""

import argparse
import json
import logging
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError

from robust_selection_bench.commands import command, register_commands
from robust_selection_bench.commands.arguments import (
    add_instance_hints,
    rational,
    read_instance_from,
    require,
)
from robust_selection_bench.errors import RobustSelectionError, format_error, handle_validation_error
from robust_selection_bench.io import write_instance
from robust_selection_bench.samplers import catalog_rows, check_sampler_invariants, format_catalog, sample_instance
from robust_selection_bench.schemas import DeltaSemantics, GeneratorId, ShapeParams

logger = logging.getLogger(__name__)


def instance_file_name(generator: GeneratorId, shape: ShapeParams) -> str:
    """``MM-D-U-n20-p11-N20-s7.csv`` style name of a sampled instance."""
    parts = [generator.value, f"n{shape.n}", f"p{shape.p}"]
    if shape.N is not None:
        parts.append(f"N{shape.N}")
    if shape.gamma is not None:
        parts.append(f"G{str(shape.gamma).replace('/', '_')}")
    if shape.delta is not None:
        parts.append(f"D{shape.delta}")
    parts.append(f"s{shape.seed}")
    return "-".join(parts) + ".csv"


@command("gen", help="Sample instances from a generator, or list the generators")
def gen_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Write one instance file plus manifest per seed in the requested range."""
    if args.list:
        rows = catalog_rows()
        print(json.dumps(rows, indent=2) if args.json else format_catalog(rows))
        return 0
    require(args, "generator", "n", "p")

    generator = GeneratorId(args.generator)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for seed in range(args.seed, args.seed + args.count):
        try:
            shape = ShapeParams(
                n=args.n,
                p=args.p,
                N=args.N,
                gamma=args.gamma,
                delta=args.delta,
                delta_semantics=args.delta_semantics,
                seed=seed,
            )
        except ValidationError as e:
            raise handle_validation_error(e, f"{generator.value} shape")
        inst = sample_instance(generator, shape)
        path, _ = write_instance(inst, outdir / instance_file_name(generator, shape))
        print(path)
    logger.info(f"Sampled {args.count} {generator.value} instance(s) into {outdir}")
    return 0


@command("validate", help="Check instance files: format, manifest and generator invariants")
def validate_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Exit 0 when every file passes, 2 when any fails."""
    failures = 0
    for path in args.paths:
        try:
            inst = read_instance_from(args, path)
        except RobustSelectionError as e:
            failures += 1
            print(f"FAIL {path}: {format_error(e)}")
            continue
        sampled = inst.provenance.generator is not None and inst.provenance.hiro is None
        problems = check_sampler_invariants(inst) if sampled else []
        if problems:
            failures += 1
            print(f"FAIL {path}:")
            for problem in problems:
                print(f"  - {problem}")
        else:
            print(f"OK {path} ({inst.pairing.value}, n={inst.n}, p={inst.p})")
    return 2 if failures else 0


def register(subparsers) -> None:
    """Register the instance commands with the CLI parser.

    Args:
        subparsers: The action returned by ``add_subparsers``
    """
    parsers = register_commands(subparsers, [gen_command, validate_command])

    gen = parsers["gen"]
    gen.add_argument("--list", action="store_true", help="Print the generator catalog and exit")
    gen.add_argument("--json", action="store_true", help="With --list: print JSON instead of a table")
    gen.add_argument("--generator", choices=[g.value for g in GeneratorId], help="Generator id")
    gen.add_argument("--n", type=int, help="Item count")
    gen.add_argument("--p", type=int, help="Selection cardinality")
    gen.add_argument("--N", type=int, help="Scenario count (discrete sets)")
    gen.add_argument("--gamma", type=rational, help="Budget Γ (budgeted sets)")
    gen.add_argument("--delta", type=int, help="Recovery parameter Δ (recoverable)")
    gen.add_argument("--delta-semantics", choices=[s.value for s in DeltaSemantics], help="Reading of Δ")
    gen.add_argument("--seed", type=int, default=1, help="First seed (default: 1)")
    gen.add_argument("--count", type=int, default=1, help="Number of consecutive seeds (default: 1)")
    gen.add_argument("--out", default=".", help="Output directory (default: current directory)")

    validate = parsers["validate"]
    validate.add_argument("paths", nargs="+", help="Instance files")
    add_instance_hints(validate)
