"""Batch runner: sample, harden, persist and solve every cell of a grid.

Each task covers one (generator, parameter tuple, seed) and yields one record
for the sampled instance plus one per hardening variant. Failures become
records with status Error; they never abort the batch.
"""

import logging
import traceback
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from robust_selection_bench.core import evaluate_robust
from robust_selection_bench.formulations import solve_robust
from robust_selection_bench.hiro import applicable_modes, default_mode, harden
from robust_selection_bench.io import instance_id, write_instance
from robust_selection_bench.samplers import sample_instance
from robust_selection_bench.schemas import (
    ERROR_STATUS,
    ExperimentConfig,
    GeneratorId,
    HiroConfig,
    HiroMode,
    Pairing,
    ParameterTuple,
    ProblemInstance,
    ResultRecord,
    ShapeParams,
    SolverConfig,
)

from .presets import expand_config

logger = logging.getLogger(__name__)

INSTANCE_DIR = "instances"

Variant = Tuple[Fraction, HiroMode]


@dataclass(frozen=True)
class BenchTask:
    """One sampled instance and the hardening variants built from it."""

    generator: GeneratorId
    params: ParameterTuple
    seed: int
    variants: Tuple[Variant, ...] = ()

    @property
    def record_count(self) -> int:
        return 1 + len(self.variants)


def _variants(generator: GeneratorId, cfg: ExperimentConfig) -> Tuple[Variant, ...]:
    if not cfg.hiro_b:
        return ()
    pairing = Pairing(generator.family)
    allowed = applicable_modes(pairing)
    if not allowed:
        logger.warning(f"{generator.value}: no hardening model for {pairing.value}; sampling only")
        return ()
    modes = [mode for mode in cfg.hiro_modes if mode in allowed] or [default_mode(pairing)]
    return tuple((b, mode) for b in cfg.hiro_b for mode in modes)


def expand_tasks(cfg: ExperimentConfig) -> List[BenchTask]:
    """Tasks of an explicit grid in canonical order."""
    tasks = []
    for generator in cfg.generators:
        variants = _variants(generator, cfg)
        for params in cfg.tuples:
            for seed in range(cfg.first_seed, cfg.first_seed + cfg.seeds_per_cell):
                tasks.append(BenchTask(generator, params, seed, variants))
    return tasks


def expected_record_count(cfg: ExperimentConfig) -> int:
    return sum(task.record_count for task in expand_tasks(expand_config(cfg)))


def _solver_cfg(cfg: ExperimentConfig) -> SolverConfig:
    return SolverConfig(time_limit=cfg.time_limit, node_limit=cfg.node_limit)


def _record(task: BenchTask, variant: Optional[Variant], **fields) -> ResultRecord:
    b, mode = variant if variant is not None else (None, None)
    return ResultRecord(
        generator=task.generator.value,
        n=task.params.n,
        p=task.params.p,
        N=task.params.N,
        gamma=task.params.gamma,
        delta=task.params.delta,
        b=b,
        hiro_mode=mode.value if mode is not None else None,
        seed=task.seed,
        **fields,
    )


def _error_record(task: BenchTask, variant: Optional[Variant], error: Exception, label: str) -> ResultRecord:
    logger.error(f"{label} failed: {error}")
    logger.debug(traceback.format_exc())
    return _record(
        task, variant, instance_id=f"error-{task.generator.value}-{task.seed}", status=ERROR_STATUS, error=str(error)
    )


def solve_and_record(
    inst: ProblemInstance, task: BenchTask, variant: Optional[Variant], cfg: ExperimentConfig, outdir: Optional[Path]
) -> ResultRecord:
    """Persist an instance (when ``outdir`` is given), solve it and describe the outcome."""
    ident = instance_id(inst)
    if outdir is not None:
        folder = outdir / INSTANCE_DIR
        folder.mkdir(parents=True, exist_ok=True)
        write_instance(inst, folder / f"{ident}.csv")
    solution, result, _ = solve_robust(inst, _solver_cfg(cfg))
    exact = evaluate_robust(solution, inst).objective if solution is not None else None
    logger.debug(f"{ident}: {result.status.value}, objective {result.objective}, {result.node_count} nodes")
    return _record(
        task,
        variant,
        instance_id=ident,
        status=result.status.value,
        objective=float(exact) if exact is not None else result.objective,
        exact_objective=exact,
        wall_time_s=result.wall_time,
        nodes=result.node_count,
    )


def run_task(task: BenchTask, cfg: ExperimentConfig, outdir: Optional[Path] = None) -> List[ResultRecord]:
    """Records of one task, exactly ``task.record_count`` of them."""
    label = f"{task.generator.value} n={task.params.n} p={task.params.p} seed={task.seed}"
    try:
        shape = ShapeParams(
            n=task.params.n,
            p=task.params.p,
            N=task.params.N,
            gamma=task.params.gamma,
            delta=task.params.delta,
            delta_semantics=cfg.delta_semantics,
            seed=task.seed,
        )
        inst = sample_instance(task.generator, shape)
    except Exception as e:
        return [_error_record(task, variant, e, label) for variant in (None, *task.variants)]

    records = []
    try:
        records.append(solve_and_record(inst, task, None, cfg, outdir))
    except Exception as e:
        records.append(_error_record(task, None, e, label))

    for variant in task.variants:
        b, mode = variant
        try:
            hiro_cfg = HiroConfig(
                b=b,
                mode=mode,
                time_limit=cfg.hiro_time_limit,
                max_iterations=cfg.hiro_max_iterations,
                solver_cfg=_solver_cfg(cfg),
            )
            hardened, _ = harden(inst, hiro_cfg)
            records.append(solve_and_record(hardened, task, variant, cfg, outdir))
        except Exception as e:
            records.append(_error_record(task, variant, e, f"{label} b={b} {mode.value}"))
    return records


def run_experiment(
    cfg: ExperimentConfig, outdir: Optional[Union[str, Path]] = None
) -> List[ResultRecord]:
    """Run every task of a config and return the records in canonical order.

    Args:
        cfg: Explicit grid or preset config
        outdir: Directory for the instance files (nothing is persisted when None)
    """
    cfg = expand_config(cfg)
    outdir = Path(outdir) if outdir is not None else None
    tasks = expand_tasks(cfg)
    logger.info(f"Experiment {cfg.name}: {len(tasks)} tasks, {sum(t.record_count for t in tasks)} records expected")

    records: List[ResultRecord] = []
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = {pool.submit(run_task, task, cfg, outdir): task for task in tasks}
            for future in as_completed(futures):
                task = futures[future]
                try:
                    records.extend(future.result())
                except Exception as e:
                    # The worker itself died; the task still owes its rows.
                    label = f"{task.generator.value} seed={task.seed}"
                    records.extend(_error_record(task, v, e, label) for v in (None, *task.variants))
    else:
        for number, task in enumerate(tasks, start=1):
            records.extend(run_task(task, cfg, outdir))
            if number % 10 == 0:
                logger.info(f"{number}/{len(tasks)} tasks done")
    return sort_records(records)


def sort_records(records: Sequence[ResultRecord]) -> List[ResultRecord]:
    return sorted(records, key=lambda r: r.sort_key)
