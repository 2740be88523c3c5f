"""Solving commands: exact solve, solution evaluation and the brute-force oracle."""

import argparse
import logging
from typing import Any, Dict

from robust_selection_bench.commands import command, register_commands
from robust_selection_bench.commands.arguments import (
    add_instance_hints,
    add_solver_limits,
    read_instance_from,
    solution_role,
    solver_cfg_from_args,
)
from robust_selection_bench.core import DEFAULT_MAX_N, brute_force_robust_opt, evaluate_robust
from robust_selection_bench.formulations import build_milp, solve_robust
from robust_selection_bench.io import read_solution, write_solution
from robust_selection_bench.milp import dump_lp
from robust_selection_bench.schemas import format_rational

logger = logging.getLogger(__name__)


def _items(solution) -> str:
    return ",".join(str(i + 1) for i in solution.support)


@command("solve", help="Solve an instance file with the built-in MILP engine")
def solve_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Print status, objective, node count and the chosen items."""
    inst = read_instance_from(args, args.path)
    if args.dump_lp:
        dump_lp(build_milp(inst).model, args.dump_lp)
        logger.info(f"Wrote model to {args.dump_lp}")

    solution, result, _ = solve_robust(inst, solver_cfg_from_args(args, config))
    print(f"status: {result.status.value}")
    if solution is not None:
        report = evaluate_robust(solution, inst)
        print(f"objective: {format_rational(report.objective)}")
        print(f"items: {_items(solution)}")
        if args.solution_out:
            write_solution(solution, args.solution_out)
    elif result.best_bound is not None:
        print(f"bound: {result.best_bound:.9g}")
    print(f"nodes: {result.node_count}")
    print(f"wall_time_s: {result.wall_time:.3f}")
    return 0


@command("eval", help="Exact robust value of a solution file")
def eval_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Print the objective and the worst case that attains it."""
    inst = read_instance_from(args, args.path)
    solution = read_solution(args.solution, inst.n, inst.p, solution_role(inst))
    report = evaluate_robust(solution, inst)
    print(f"objective: {format_rational(report.objective)}")
    witness = report.witness
    if witness.scenario_index is not None:
        print(f"worst scenario: {witness.scenario_index + 1}")
    print(f"worst costs: {','.join(format_rational(c) for c in witness.scenario)}")
    if report.second_stage is not None:
        print(f"response: {_items(report.second_stage)}")
    return 0


@command("oracle", help="Brute-force robust optimum of a small instance")
def oracle_command(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    inst = read_instance_from(args, args.path)
    solution, value = brute_force_robust_opt(inst, max_n=args.max_n)
    print(f"objective: {format_rational(value)}")
    print(f"items: {_items(solution)}")
    return 0


def register(subparsers) -> None:
    """Register the solving commands with the CLI parser.

    Args:
        subparsers: The action returned by ``add_subparsers``
    """
    parsers = register_commands(subparsers, [solve_command, eval_command, oracle_command])

    solve = parsers["solve"]
    solve.add_argument("path", help="Instance file")
    add_solver_limits(solve)
    solve.add_argument("--dump-lp", metavar="PATH", help="Also write the model in LP-style text")
    solve.add_argument("--solution-out", metavar="PATH", help="Write the solution indicator line")
    add_instance_hints(solve)

    evaluate = parsers["eval"]
    evaluate.add_argument("path", help="Instance file")
    evaluate.add_argument("solution", help="Solution file: one line of n 0/1 indicators")
    add_instance_hints(evaluate)

    oracle = parsers["oracle"]
    oracle.add_argument("path", help="Instance file")
    oracle.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help=f"Size guard (default: {DEFAULT_MAX_N})")
    add_instance_hints(oracle)
