"""Seeded random streams.

Every instance draws from PCG64 generators derived from its 64-bit seed with
``numpy.random.SeedSequence``: stream 0 feeds item-level vectors (first-stage
costs, lower bounds, deviations), stream j + 1 feeds scenario j. Adding
scenarios therefore never changes earlier rows. Integer draws include both
endpoints and are unbiased (``Generator.integers`` rejects instead of taking a
modulus).
"""

from typing import List

import numpy as np

ITEM_STREAM = 0


def stream(seed: int, index: int) -> np.random.Generator:
    """PCG64 generator for stream ``index`` of ``seed``."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(sequence))


def scenario_stream(seed: int, scenario: int) -> np.random.Generator:
    """Stream of the 0-based scenario index."""
    return stream(seed, scenario + 1)


def uniform(rng: np.random.Generator, low: int, high: int, size: int) -> np.ndarray:
    """``size`` integers drawn uniformly from {low, ..., high}."""
    return rng.integers(low, high, size=size, endpoint=True)


def coin(rng: np.random.Generator, size: int) -> np.ndarray:
    """``size`` fair 0/1 draws."""
    return rng.integers(0, 1, size=size, endpoint=True)


def to_ints(values: np.ndarray) -> List[int]:
    return [int(v) for v in values]
