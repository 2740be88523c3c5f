"""Experiment presets: the full-size study grids, shrunk to desk size on expansion.

A preset lists generators, parameter tuples and hardening settings at full
size. ``expand_config`` turns a preset config into an explicit grid: n, p, Γ
and Δ are scaled so that n stays within ``desk_max_n`` (unless that is None)
and everything, time limits included, is further scaled by ``scale``.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import Field, ValidationError

from robust_selection_bench.errors import ParameterError, handle_validation_error
from robust_selection_bench.schemas import (
    ExperimentConfig,
    FrozenModel,
    GeneratorId,
    HiroMode,
    ParameterTuple,
    Rational,
)

logger = logging.getLogger(__name__)

DESK_MAX_SCENARIOS = 100
FULL_TIME_LIMIT = 600.0
FULL_SEEDS_PER_CELL = 50
MIN_TIME_LIMIT = 1.0


class Preset(FrozenModel):
    """A named experiment grid at full size."""

    id: str
    description: str
    generators: Tuple[GeneratorId, ...]
    tuples: Tuple[ParameterTuple, ...]
    hiro_b: Tuple[Rational, ...] = ()
    hiro_modes: Tuple[HiroMode, ...] = ()
    deviation_sum_budget: bool = Field(False, description="Γ is a deviation mass, not an item count")

    @property
    def max_n(self) -> int:
        return max(t.n for t in self.tuples)


def _family(prefix: str) -> Tuple[GeneratorId, ...]:
    return tuple(GeneratorId(f"{prefix}-{variant}") for variant in ("U", "1", "2"))


def _tuples(rows: Iterable[Tuple]) -> Tuple[ParameterTuple, ...]:
    keys = ("n", "p", "N", "gamma", "delta")
    return tuple(ParameterTuple(**dict(zip(keys, row))) for row in rows)


BUDGETED_GRID = {25: (5, 10, 15, 20), 50: (10, 20, 30, 40), 75: (15, 30, 45, 60)}
DEVIATION_SUMS = (400, 800, 1000, 1200)
STAGED_MODES = (HiroMode.FIRST_STAGE_ONLY, HiroMode.FIRST_AND_SECOND_STAGE)
BOX_MODES = (HiroMode.LOWER_BOUNDS, HiroMode.DEVIATIONS, HiroMode.BOTH)
SMALL_B = (1, 2, 5)


def _build_presets() -> Dict[str, Preset]:
    presets = [
        Preset(
            id="mm-d-exp1",
            description="MinMax discrete: (n, p) from (20, 11) to (40, 21), N = n",
            generators=_family("MM-D"),
            tuples=_tuples((n, p, n) for n, p in ((20, 11), (25, 13), (30, 15), (35, 17), (40, 21))),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mm-d-exp2",
            description="MinMax discrete: n = N = 30, p sweep",
            generators=_family("MM-D"),
            tuples=_tuples((30, p, 30) for p in (5, 11, 15, 21, 25)),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mm-d-exp3",
            description="MinMax discrete: n = 30, p = 15, N sweep",
            generators=_family("MM-D"),
            tuples=_tuples((30, 15, N) for N in range(5, 45, 5)),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mm-d-exp4",
            description="MinMax discrete: many scenarios, sampling only",
            generators=_family("MM-D"),
            tuples=_tuples((30, 15, N) for N in (100, 500, 1000, 5000, 10000)),
        ),
        Preset(
            id="mm-b",
            description="MinMax budgeted: n = 40, p = 20, Γ sweep, all hardening modes",
            generators=_family("MM-B"),
            tuples=_tuples((40, 20, None, gamma) for gamma in (5, 10, 15, 20)),
            hiro_b=(1, 2, 5, 10, 20),
            hiro_modes=BOX_MODES,
        ),
        Preset(
            id="mmr-i",
            description="MinMaxRegret interval: n = 100, p sweep",
            generators=_family("MMR-I"),
            tuples=_tuples((100, p) for p in range(10, 100, 10)),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mmr-d-exp1",
            description="MinMaxRegret discrete: (N, n, p) all changing",
            generators=_family("MMR-D"),
            tuples=_tuples((n, p, N) for N, n, p in ((30, 30, 15), (40, 40, 20), (40, 40, 21))),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mmr-d-exp2",
            description="MinMaxRegret discrete: n = N = 30, p sweep",
            generators=_family("MMR-D"),
            tuples=_tuples((30, p, 30) for p in (10, 11, 15, 20, 21)),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mmr-d-exp3",
            description="MinMaxRegret discrete: n = 30, p = 15, N sweep",
            generators=_family("MMR-D"),
            tuples=_tuples((30, 15, N) for N in (20, 30, 40)),
            hiro_b=SMALL_B,
        ),
        Preset(
            id="mmr-d-exp4",
            description="MinMaxRegret discrete: many scenarios, sampling only",
            generators=_family("MMR-D"),
            tuples=_tuples((30, 15, N) for N in (100, 200, 500, 1000, 2000, 5000)),
        ),
        Preset(
            id="2st-d-exp1",
            description="TwoStage discrete: n = N = 50, p = 25 and n = N = 100, p = 50",
            generators=_family("2ST-D"),
            tuples=_tuples(((50, 25, 50), (100, 50, 100))),
            hiro_b=SMALL_B,
            hiro_modes=STAGED_MODES,
        ),
        Preset(
            id="2st-d-exp2",
            description="TwoStage discrete: n = N = 50, p sweep",
            generators=_family("2ST-D"),
            tuples=_tuples((50, p, 50) for p in (10, 20, 25, 30, 40)),
            hiro_b=SMALL_B,
            hiro_modes=STAGED_MODES,
        ),
        Preset(
            id="2st-d-exp3",
            description="TwoStage discrete: n = 50, p = 25, N sweep",
            generators=_family("2ST-D"),
            tuples=_tuples((50, 25, N) for N in range(10, 70, 10)),
            hiro_b=SMALL_B,
            hiro_modes=STAGED_MODES,
        ),
        Preset(
            id="2st-d-exp4",
            description="TwoStage discrete: many scenarios, sampling only",
            generators=_family("2ST-D"),
            tuples=_tuples((50, 25, N) for N in (100, 200, 500, 1000, 2000, 5000)),
        ),
        Preset(
            id="2st-db",
            description="TwoStage discrete budgeted: n = 100, Γ grid per p",
            generators=_family("2ST-DB"),
            tuples=_tuples((100, p, None, gamma) for p, gammas in BUDGETED_GRID.items() for gamma in gammas),
        ),
        Preset(
            id="2st-cb",
            description="TwoStage deviation-sum budgeted: n = 100, Γ in {400, 800, 1000, 1200}",
            generators=_family("2ST-CB"),
            tuples=_tuples((100, p, None, gamma) for p in BUDGETED_GRID for gamma in DEVIATION_SUMS),
            deviation_sum_budget=True,
        ),
        Preset(
            id="rr-d-exp1",
            description="Recoverable discrete: n = N = 50 and 100 with two Δ each",
            generators=_family("RR-D"),
            tuples=_tuples(
                (n, p, n, None, delta) for n, p, deltas in ((50, 25, (13, 20)), (100, 50, (25, 40))) for delta in deltas
            ),
            hiro_b=SMALL_B,
            hiro_modes=STAGED_MODES,
        ),
        Preset(
            id="rr-d-exp2",
            description="Recoverable discrete: n = N = 50, (p, Δ) sweep",
            generators=_family("RR-D"),
            tuples=_tuples(
                (50, p, 50, None, delta) for p, deltas in ((25, (13, 20)), (30, (15, 25)), (40, (20, 30)))
                for delta in deltas
            ),
            hiro_b=SMALL_B,
            hiro_modes=STAGED_MODES,
        ),
        Preset(
            id="rr-d-exp3",
            description="Recoverable discrete: n = 50, p = 25, N and Δ sweep",
            generators=_family("RR-D"),
            tuples=_tuples((50, 25, N, None, delta) for N in (40, 50, 60) for delta in (13, 20)),
            hiro_b=SMALL_B,
            hiro_modes=STAGED_MODES,
        ),
        Preset(
            id="rr-d-exp4",
            description="Recoverable discrete: many scenarios, sampling only",
            generators=_family("RR-D"),
            tuples=_tuples((50, 25, N, None, delta) for N in (100, 200, 500, 1000, 2000) for delta in (13, 20)),
        ),
        Preset(
            id="rr-db",
            description="Recoverable discrete budgeted: n = 100, (Γ, Δ) grid per p",
            generators=_family("RR-DB"),
            tuples=_tuples(
                (100, p, None, gamma, delta)
                for p, values in BUDGETED_GRID.items()
                for gamma in values
                for delta in values
            ),
        ),
        Preset(
            id="rr-cb",
            description="Recoverable deviation-sum budgeted: n = 100, Γ in {400, 800, 1000, 1200}, Δ grid per p",
            generators=_family("RR-CB"),
            tuples=_tuples(
                (100, p, None, gamma, delta) for p, deltas in BUDGETED_GRID.items() for gamma in DEVIATION_SUMS
                for delta in deltas
            ),
            deviation_sum_budget=True,
        ),
    ]
    return {preset.id: preset for preset in presets}


PRESETS: Dict[str, Preset] = _build_presets()


def get_preset(preset_id: str) -> Preset:
    """Look up a preset.

    Raises:
        ParameterError: If the id is unknown
    """
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise ParameterError(f"unknown preset {preset_id!r}; choose one of {', '.join(sorted(PRESETS))}")


def preset_config(
    preset_id: str,
    scale: float = 1.0,
    full: bool = False,
    seeds_per_cell: Optional[int] = None,
    time_limit: Optional[float] = None,
    desk_max_n: int = 30,
    **overrides,
) -> ExperimentConfig:
    """ExperimentConfig for a preset at desk size, or at full size with ``full``.

    Full size restores the 600-second limits and 50 seeds per cell.
    """
    get_preset(preset_id)
    values = dict(
        name=preset_id,
        preset=preset_id,
        scale=scale,
        desk_max_n=None if full else desk_max_n,
        seeds_per_cell=seeds_per_cell or (FULL_SEEDS_PER_CELL if full else 5),
        time_limit=time_limit or (FULL_TIME_LIMIT if full else 10.0),
    )
    if full:
        values["hiro_time_limit"] = FULL_TIME_LIMIT
    values.update(overrides)
    try:
        return ExperimentConfig(**values)
    except ValidationError as e:
        raise handle_validation_error(e, f"preset {preset_id}")


def _scaled(value: int, factor: float, floor: int, cap: Optional[int] = None) -> int:
    scaled = max(floor, int(round(value * factor)))
    return scaled if cap is None else min(scaled, cap)


def scale_tuple(
    t: ParameterTuple, factor: float, deviation_sum_budget: bool, max_scenarios: Optional[int]
) -> ParameterTuple:
    """Shrink a grid point, keeping 1 <= p <= n, Γ within range and Δ <= p."""
    n = _scaled(t.n, factor, 2)
    p = _scaled(t.p, factor, 1, n)
    N = None if t.N is None else _scaled(t.N, factor, 1, max_scenarios)
    gamma = t.gamma
    if gamma is not None:
        cap = None if deviation_sum_budget else n
        gamma = _scaled(int(gamma), factor, 1, cap)
    delta = None if t.delta is None else _scaled(t.delta, factor, 1, p)
    return ParameterTuple(n=n, p=p, N=N, gamma=gamma, delta=delta)


def _unique(tuples: Sequence[ParameterTuple]) -> Tuple[ParameterTuple, ...]:
    seen: List[ParameterTuple] = []
    for t in tuples:
        if t not in seen:
            seen.append(t)
    return tuple(seen)


def expand_config(cfg: ExperimentConfig) -> ExperimentConfig:
    """Explicit grid of a config; explicit grids pass through unchanged."""
    if cfg.preset is None:
        return cfg
    preset = get_preset(cfg.preset)
    factor = cfg.scale
    if cfg.desk_max_n is not None:
        factor *= min(1.0, cfg.desk_max_n / preset.max_n)
    max_scenarios = DESK_MAX_SCENARIOS if cfg.desk_max_n is not None else None
    tuples = _unique([scale_tuple(t, factor, preset.deviation_sum_budget, max_scenarios) for t in preset.tuples])
    logger.info(
        f"Preset {preset.id}: {len(preset.generators)} generators x {len(tuples)} tuples "
        f"(size factor {factor:.3f}), {cfg.seeds_per_cell} seeds per cell"
    )
    return cfg.model_copy(
        update={
            "preset": None,
            "generators": preset.generators,
            "tuples": tuples,
            "hiro_b": cfg.hiro_b or preset.hiro_b,
            "hiro_modes": cfg.hiro_modes or preset.hiro_modes,
            "time_limit": max(MIN_TIME_LIMIT, cfg.time_limit * cfg.scale),
            "hiro_time_limit": max(MIN_TIME_LIMIT, cfg.hiro_time_limit * cfg.scale),
        }
    )


def preset_rows() -> List[Dict[str, str]]:
    """One printable row per preset."""
    return [
        {
            "id": preset.id,
            "generators": ",".join(g.value for g in preset.generators),
            "tuples": str(len(preset.tuples)),
            "hiro_b": ",".join(str(b) for b in preset.hiro_b) or "-",
            "description": preset.description,
        }
        for preset in PRESETS.values()
    ]
