"""sample_instance: deterministic instance generation from (generator, shape)."""

import logging
from typing import Callable, Dict, List, Tuple

from pydantic import ValidationError

from robust_selection_bench.errors import ParameterError, handle_validation_error
from robust_selection_bench.schemas import (
    BudgetedSet,
    Criterion,
    DiscreteSet,
    GeneratorId,
    IntervalSet,
    ProblemInstance,
    Provenance,
    ShapeParams,
)

from . import recipes
from .catalog import CATALOG, GeneratorSpec
from .rng import ITEM_STREAM, scenario_stream, stream

logger = logging.getLogger(__name__)

_SCENARIO_RECIPES: Dict[str, Callable] = {
    "U": recipes.scenario_uniform,
    "1": recipes.scenario_low_high,
    "2": recipes.scenario_symmetric,
}
_FIRST_STAGE_RECIPES: Dict[str, Tuple[Callable, Callable]] = {
    "U": (recipes.first_stage_uniform, None),
    "1": (recipes.first_stage_centered, recipes.second_stage_mixture),
    "2": (recipes.first_stage_split, recipes.second_stage_split),
}
_BUDGET_RECIPES: Dict[str, Callable] = {
    "U": recipes.bounds_uniform,
    "1": recipes.bounds_common_upper,
    "2": recipes.bounds_cheap_volatile,
}
_REGRET_RECIPES: Dict[str, Callable] = {
    "U": recipes.bounds_uniform,
    "1": recipes.bounds_opposed,
    "2": recipes.bounds_aligned,
}
_STAGED_BUDGET_RECIPES: Dict[str, Callable] = {
    "U": recipes.staged_uniform,
    "1": recipes.staged_cheap_volatile,
    "2": recipes.staged_complement,
}


def _check_shape(spec: GeneratorSpec, shape: ShapeParams) -> None:
    for name in ("N", "gamma", "delta"):
        given = getattr(shape, name) is not None
        needed = name in spec.required
        if needed and not given:
            raise ParameterError(f"generator {spec.id.value} needs {name}")
        if given and not needed:
            raise ParameterError(f"generator {spec.id.value} takes no {name}")
    if shape.delta_semantics is not None and spec.criterion != Criterion.RECOVERABLE:
        raise ParameterError(f"generator {spec.id.value} takes no delta_semantics")


def _discrete_rows(variant: str, shape: ShapeParams) -> List[List[int]]:
    recipe = _SCENARIO_RECIPES[variant]
    return [recipe(scenario_stream(shape.seed, j), shape.n) for j in range(shape.N)]


def _staged_discrete(variant: str, shape: ShapeParams) -> Tuple[List[int], List[List[int]]]:
    first_stage_recipe, second_stage_recipe = _FIRST_STAGE_RECIPES[variant]
    first_stage = first_stage_recipe(stream(shape.seed, ITEM_STREAM), shape.n)
    rows = []
    for j in range(shape.N):
        rng = scenario_stream(shape.seed, j)
        if second_stage_recipe is None:
            rows.append(recipes.scenario_uniform(rng, shape.n))
        else:
            rows.append(second_stage_recipe(rng, first_stage))
    return first_stage, rows


def sample_instance(generator: GeneratorId, shape: ShapeParams) -> ProblemInstance:
    """Draw one instance; the same (generator, shape) always gives the same instance.

    Args:
        generator: Catalog id
        shape: Sizes, budget, recovery parameter and seed

    Returns:
        ProblemInstance whose provenance records the generator and seed

    Raises:
        ParameterError: If the shape does not fit the generator
    """
    generator = GeneratorId(generator)
    spec = CATALOG[generator]
    _check_shape(spec, shape)
    family, variant = generator.family, generator.variant
    item_rng = stream(shape.seed, ITEM_STREAM)

    data = {
        "n": shape.n,
        "p": shape.p,
        "criterion": spec.criterion,
        "provenance": Provenance(generator=generator.value, seed=shape.seed),
    }
    if family in ("MM-D", "MMR-D"):
        data["uncertainty"] = DiscreteSet(scenarios=_discrete_rows(variant, shape))
    elif family in ("2ST-D", "RR-D"):
        first_stage, rows = _staged_discrete(variant, shape)
        data["first_stage_costs"] = first_stage
        data["uncertainty"] = DiscreteSet(scenarios=rows)
    elif family == "MMR-I":
        lower, deviation = _REGRET_RECIPES[variant](item_rng, shape.n)
        data["uncertainty"] = IntervalSet(lower=lower, deviation=deviation)
    elif family == "MM-B":
        lower, deviation = _BUDGET_RECIPES[variant](item_rng, shape.n)
        data["uncertainty"] = {
            "kind": "budgeted", "lower": lower, "deviation": deviation,
            "gamma": shape.gamma, "mode": spec.budget_mode,
        }
    else:
        first_stage, lower, deviation = _STAGED_BUDGET_RECIPES[variant](item_rng, shape.n)
        data["first_stage_costs"] = first_stage
        data["uncertainty"] = {
            "kind": "budgeted", "lower": lower, "deviation": deviation,
            "gamma": shape.gamma, "mode": spec.budget_mode,
        }
    if spec.criterion == Criterion.RECOVERABLE:
        data["delta"] = shape.delta
        data["delta_semantics"] = shape.delta_semantics

    try:
        instance = ProblemInstance(**data)
    except ValidationError as e:
        raise handle_validation_error(e, f"{generator.value} instance")
    logger.debug(f"Sampled {generator.value} n={shape.n} p={shape.p} seed={shape.seed}")
    return instance
