"""Instance generators: seeded recipes, catalog and invariant checks."""

from .catalog import CATALOG, GeneratorSpec, catalog_rows, format_catalog
from .generators import sample_instance
from .invariants import check_sampler_invariants
from .rng import scenario_stream, stream

__all__ = [
    "CATALOG",
    "GeneratorSpec",
    "catalog_rows",
    "check_sampler_invariants",
    "format_catalog",
    "sample_instance",
    "scenario_stream",
    "stream",
]
