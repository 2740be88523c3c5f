"""Affine expressions and the selection dual shared by the single-shot models."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence

from robust_selection_bench.formulations import FormulationBuilder, variable_name
from robust_selection_bench.milp import Relation
from robust_selection_bench.schemas import to_fraction


@dataclass
class Affine:
    """Σ coef·column + constant."""

    terms: Dict[int, Fraction] = field(default_factory=dict)
    constant: Fraction = Fraction(0)

    @classmethod
    def const(cls, value) -> "Affine":
        return cls({}, to_fraction(value))

    @classmethod
    def column(cls, j: int, coef=1) -> "Affine":
        return cls({j: to_fraction(coef)}, Fraction(0))

    def __add__(self, other: "Affine") -> "Affine":
        terms = dict(self.terms)
        for j, coef in other.terms.items():
            terms[j] = terms.get(j, Fraction(0)) + coef
        return Affine(terms, self.constant + other.constant)

    def __sub__(self, other: "Affine") -> "Affine":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "Affine":
        factor = to_fraction(factor)
        return Affine({j: coef * factor for j, coef in self.terms.items()}, self.constant * factor)


def add_selection_dual(
    builder: FormulationBuilder, t: int, k: int, p: int, costs: Sequence[Affine], offset: Affine
) -> None:
    """Bound t by offset plus the dual of "pick p cheapest items under costs".

    Adds a free α[k] and β[i,k] >= 0 with α − β_i <= cost_i for every item and
    t <= offset + p α − Σβ_i.
    """
    alpha = builder.var("alpha", k, lower=None)
    value = Affine.column(t) - offset - Affine.column(alpha, p)
    for i, cost in enumerate(costs):
        beta = builder.var("beta", i + 1, k)
        value = value + Affine.column(beta)
        row = Affine.column(alpha) - Affine.column(beta) - cost
        builder.add_constraint(row.terms, Relation.LE, -row.constant, name=variable_name("price", i + 1, k))
    builder.add_constraint(value.terms, Relation.LE, -value.constant, name=variable_name("value", k))
