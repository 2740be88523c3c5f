"""Small random instances for the acceptance sweeps."""

import itertools
from fractions import Fraction

import numpy as np

from robust_selection_bench.schemas import BudgetMode, DeltaSemantics, Pairing, ProblemInstance

COST_HIGH = 20


def _costs(rng: np.random.Generator, n: int):
    return [int(v) for v in rng.integers(0, COST_HIGH + 1, size=n)]


def random_instance(pairing: Pairing, seed: int, max_n: int = 6) -> ProblemInstance:
    """Small random instance of a pairing with integer costs in [0, 20].

    Item budgets stay at Γ <= 3 (integral for DiscreteItems, halves for
    ContinuousItems), a deviation-sum budget may be anything up to the total
    deviation, and recoverable instances alternate both readings of Δ.
    """
    rng = np.random.default_rng([seed, list(Pairing).index(pairing)])
    n = int(rng.integers(3, max_n + 1))
    p = int(rng.integers(1, min(n, 4) + 1))
    family, _, kind = pairing.value.partition("-")
    criterion = {"MM": "MinMax", "MMR": "MinMaxRegret", "2ST": "TwoStage", "RR": "Recoverable"}[family]
    data = {"n": n, "p": p, "criterion": criterion}

    if kind == "D":
        N = int(rng.integers(1, 5))
        data["uncertainty"] = {"kind": "discrete", "scenarios": [_costs(rng, n) for _ in range(N)]}
    elif kind == "I":
        data["uncertainty"] = {"kind": "interval", "lower": _costs(rng, n), "deviation": _costs(rng, n)}
    else:
        deviation = _costs(rng, n)
        if kind == "DB":
            mode = BudgetMode.DISCRETE_ITEMS
        elif kind == "CB":
            mode = BudgetMode.VARIABLE_BUDGET if rng.random() < 0.5 else BudgetMode.CONTINUOUS_ITEMS
        else:
            mode = BudgetMode(str(rng.choice([m.value for m in BudgetMode])))
        if mode == BudgetMode.VARIABLE_BUDGET:
            gamma = Fraction(int(rng.integers(0, sum(deviation) + 1)))
        elif mode == BudgetMode.DISCRETE_ITEMS:
            gamma = Fraction(int(rng.integers(0, min(n, 3) + 1)))
        else:
            gamma = Fraction(int(rng.integers(0, 2 * min(n, 3) + 1)), 2)
        data["uncertainty"] = {
            "kind": "budgeted", "lower": _costs(rng, n), "deviation": deviation, "gamma": gamma, "mode": mode,
        }

    if criterion in ("TwoStage", "Recoverable"):
        data["first_stage_costs"] = _costs(rng, n)
    if criterion == "Recoverable":
        data["delta"] = int(rng.integers(0, p + 1))
        data["delta_semantics"] = DeltaSemantics.KEPT_AT_LEAST if seed % 2 else DeltaSemantics.CHANGED_AT_MOST
    return ProblemInstance(**data)


def cases(pairings, count: int, max_n: int = 6):
    """(pairing, seed, instance) triples for a sweep."""
    for pairing, seed in itertools.product(pairings, range(count)):
        yield pairing, seed, random_instance(pairing, seed, max_n)
