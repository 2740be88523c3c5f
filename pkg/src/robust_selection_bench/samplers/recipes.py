"""Cost-vector recipes, one per sampling family and variant.

Ranges are inclusive integer sets; "low" is {1..10}, "high" is {91..100}.
"""

from typing import List, Tuple

import numpy as np

from .rng import coin, to_ints, uniform

LOW = (1, 10)
HIGH = (91, 100)
FULL = (1, 100)
COST_CAP = 100


def low_or_high(rng: np.random.Generator, n: int) -> np.ndarray:
    """Each entry from low or high with probability 1/2."""
    pick_high = coin(rng, n)
    low = uniform(rng, *LOW, n)
    high = uniform(rng, *HIGH, n)
    return np.where(pick_high == 1, high, low)


# Discrete scenario rows (min-max and regret share these).

def scenario_uniform(rng: np.random.Generator, n: int) -> List[int]:
    return to_ints(uniform(rng, *FULL, n))


def scenario_low_high(rng: np.random.Generator, n: int) -> List[int]:
    return to_ints(low_or_high(rng, n))


def scenario_symmetric(rng: np.random.Generator, n: int) -> List[int]:
    """First ⌊n/2⌋ entries uniform, then c_i = 100 − c_{i−⌊n/2⌋} for the rest.

    The mirror rule is applied in index order, so with n odd the last item
    mirrors an item that is itself a mirror. A single item is drawn plainly.
    """
    half = n // 2
    if half == 0:
        return to_ints(uniform(rng, *FULL, n))
    row = to_ints(uniform(rng, *FULL, half))
    for i in range(half, n):
        row.append(100 - row[i - half])
    return row


# Two-stage / recoverable discrete: first-stage costs from the item stream,
# scenario rows depend on them.

def first_stage_uniform(rng: np.random.Generator, n: int) -> List[int]:
    return to_ints(uniform(rng, *FULL, n))


def first_stage_centered(rng: np.random.Generator, n: int) -> List[int]:
    """C_i from {45..55} or {25..75} with probability 1/2 each."""
    wide = coin(rng, n)
    narrow_draw = uniform(rng, 45, 55, n)
    wide_draw = uniform(rng, 25, 75, n)
    return to_ints(np.where(wide == 1, wide_draw, narrow_draw))


def first_stage_split(rng: np.random.Generator, n: int) -> List[int]:
    """C_i uniform with probability 1/2, otherwise exactly 50."""
    fixed = coin(rng, n)
    draw = uniform(rng, *FULL, n)
    return to_ints(np.where(fixed == 1, 50, draw))


def second_stage_mixture(rng: np.random.Generator, first_stage: List[int]) -> List[int]:
    """Near C_i (±5) with probability 1/2, low or high with 1/4 each."""
    n = len(first_stage)
    selector = uniform(rng, 0, 3, n)
    offsets = uniform(rng, -5, 5, n)
    low = uniform(rng, *LOW, n)
    high = uniform(rng, *HIGH, n)
    near = np.array(first_stage) + offsets
    return to_ints(np.where(selector <= 1, near, np.where(selector == 2, low, high)))


def second_stage_split(rng: np.random.Generator, first_stage: List[int]) -> List[int]:
    """C_i = 50: low or high by a fair coin; otherwise C_i ± 5 clamped to {0..100}."""
    n = len(first_stage)
    base = np.array(first_stage)
    extreme = low_or_high(rng, n)
    near = np.clip(base + uniform(rng, -5, 5, n), 0, COST_CAP)
    return to_ints(np.where(base == 50, extreme, near))


# Interval / budgeted vectors: (lower, deviation) from the item stream.

def bounds_uniform(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int]]:
    return to_ints(uniform(rng, *FULL, n)), to_ints(uniform(rng, *FULL, n))


def bounds_common_upper(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int]]:
    """lower uniform, deviation = 100 − lower (every upper bound is 100)."""
    lower = uniform(rng, *FULL, n)
    return to_ints(lower), to_ints(100 - lower)


def bounds_cheap_volatile(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int]]:
    """lower from {1..10}, deviation from {99 − lower .. 100} (lower endpoint as printed)."""
    lower = uniform(rng, *LOW, n)
    deviation = np.array([rng.integers(99 - l, 100, endpoint=True) for l in lower])
    return to_ints(lower), to_ints(deviation)


def bounds_opposed(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int]]:
    """(low lower, high deviation) or (high lower, low deviation), fair coin."""
    flip = coin(rng, n)
    low_a, high_a = uniform(rng, *LOW, n), uniform(rng, *HIGH, n)
    low_b, high_b = uniform(rng, *LOW, n), uniform(rng, *HIGH, n)
    lower = np.where(flip == 1, high_a, low_a)
    deviation = np.where(flip == 1, low_b, high_b)
    return to_ints(lower), to_ints(deviation)


def bounds_aligned(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int]]:
    """Both low or both high, fair coin."""
    flip = coin(rng, n)
    low_a, high_a = uniform(rng, *LOW, n), uniform(rng, *HIGH, n)
    low_b, high_b = uniform(rng, *LOW, n), uniform(rng, *HIGH, n)
    lower = np.where(flip == 1, high_a, low_a)
    deviation = np.where(flip == 1, high_b, low_b)
    return to_ints(lower), to_ints(deviation)


# Two-stage / recoverable budgeted: (C, lower, deviation) from the item stream.

def staged_uniform(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int], List[int]]:
    return (
        to_ints(uniform(rng, *FULL, n)),
        to_ints(uniform(rng, *FULL, n)),
        to_ints(uniform(rng, *FULL, n)),
    )


def staged_cheap_volatile(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int], List[int]]:
    """C uniform, lower from {1..10}, deviation from {100 − lower .. 100}."""
    first_stage = uniform(rng, *FULL, n)
    lower = uniform(rng, *LOW, n)
    deviation = np.array([rng.integers(100 - l, 100, endpoint=True) for l in lower])
    return to_ints(first_stage), to_ints(lower), to_ints(deviation)


def staged_complement(rng: np.random.Generator, n: int) -> Tuple[List[int], List[int], List[int]]:
    """C uniform, lower = 100 − C, deviation from {lower .. 100}."""
    first_stage = uniform(rng, *FULL, n)
    lower = 100 - first_stage
    deviation = np.array([rng.integers(l, 100, endpoint=True) for l in lower])
    return to_ints(first_stage), to_ints(lower), to_ints(deviation)
