"""Immutable 0-1 mixed linear program and the builder that produces it."""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from robust_selection_bench.errors import ModelDefectError
from robust_selection_bench.schemas import to_fraction

logger = logging.getLogger(__name__)

Coefficients = Union[Mapping[int, object], Iterable[Tuple[int, object]]]


class VariableKind(str, Enum):
    CONTINUOUS = "Continuous"
    BINARY = "Binary"


class Relation(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class Sense(str, Enum):
    MIN = "Min"
    MAX = "Max"


@dataclass(frozen=True)
class Variable:
    """A model column; ``None`` bounds stand for ∓infinity."""

    name: str
    kind: VariableKind = VariableKind.CONTINUOUS
    lower: Optional[Fraction] = Fraction(0)
    upper: Optional[Fraction] = None

    @property
    def is_binary(self) -> bool:
        return self.kind == VariableKind.BINARY


@dataclass(frozen=True)
class Constraint:
    name: str
    coefficients: Tuple[Tuple[int, Fraction], ...]
    relation: Relation
    rhs: Fraction


@dataclass(frozen=True)
class Objective:
    coefficients: Tuple[Tuple[int, Fraction], ...] = ()
    constant: Fraction = Fraction(0)
    sense: Sense = Sense.MIN


@dataclass(frozen=True)
class MilpModel:
    """A built model. Never mutated after ``ModelBuilder.build``."""

    name: str
    variables: Tuple[Variable, ...]
    constraints: Tuple[Constraint, ...]
    objective: Objective = field(default_factory=Objective)

    @cached_property
    def index(self) -> Dict[str, int]:
        """Variable name to column index."""
        return {var.name: j for j, var in enumerate(self.variables)}

    @cached_property
    def binaries(self) -> Tuple[int, ...]:
        return tuple(j for j, var in enumerate(self.variables) if var.is_binary)

    @property
    def nonzeros(self) -> int:
        return sum(len(con.coefficients) for con in self.constraints)

    def variable_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"model {self.name} has no variable {name!r}")

    def objective_value(self, values: Mapping[str, object]) -> Fraction:
        """Objective of an assignment given by name (exact when values are exact)."""
        total = self.objective.constant
        for j, coef in self.objective.coefficients:
            total += coef * to_fraction(values[self.variables[j].name])
        return total

    def row_activity(self, constraint: Constraint, values: Mapping[str, object]) -> Fraction:
        return sum(
            (coef * to_fraction(values[self.variables[j].name]) for j, coef in constraint.coefficients),
            Fraction(0),
        )


def _as_bound(value, default: Optional[Fraction]) -> Optional[Fraction]:
    if value is None:
        return default
    if isinstance(value, float) and math.isinf(value):
        return None
    return to_fraction(value)


def _merge_coefficients(coefficients: Coefficients) -> Tuple[Tuple[int, Fraction], ...]:
    items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
    merged: Dict[int, Fraction] = {}
    for j, coef in items:
        merged[j] = merged.get(j, Fraction(0)) + to_fraction(coef)
    return tuple((j, coef) for j, coef in sorted(merged.items()) if coef != 0)


class ModelBuilder:
    """Accumulates variables and rows, then freezes them into a MilpModel.

    Variable names follow the "symbol[indices]" convention with 1-based item
    indices, e.g. ``x[3]``, ``y[2,1]``, ``rho[4]``.
    """

    def __init__(self, name: str = "model"):
        self.name = name
        self._variables: List[Variable] = []
        self._constraints: List[Constraint] = []
        self._objective = Objective()

    @property
    def variable_count(self) -> int:
        return len(self._variables)

    def add_variable(
        self,
        name: str,
        lower=0,
        upper=None,
        kind: VariableKind = VariableKind.CONTINUOUS,
    ) -> int:
        """Add a column and return its index.

        ``lower=None`` means free below; ``upper=None`` means unbounded above.
        """
        if kind == VariableKind.BINARY:
            lower = Fraction(0) if lower is None else to_fraction(lower)
            upper = Fraction(1) if upper is None else to_fraction(upper)
            self._variables.append(Variable(name, kind, lower, upper))
        else:
            low = None if lower is None else _as_bound(lower, Fraction(0))
            self._variables.append(Variable(name, kind, low, _as_bound(upper, None)))
        return len(self._variables) - 1

    def add_continuous(self, name: str, lower=0, upper=None) -> int:
        return self.add_variable(name, lower, upper)

    def add_free(self, name: str) -> int:
        return self.add_variable(name, lower=None)

    def add_binary(self, name: str) -> int:
        return self.add_variable(name, kind=VariableKind.BINARY)

    def fix(self, j: int, value) -> None:
        """Fix column j to a value through its bounds."""
        var = self._variables[j]
        value = to_fraction(value)
        self._variables[j] = Variable(var.name, var.kind, value, value)

    def add_constraint(self, coefficients: Coefficients, relation: Relation, rhs, name: Optional[str] = None) -> int:
        """Add a row; repeated column indices are summed and zero entries dropped."""
        name = name or f"c{len(self._constraints) + 1}"
        self._constraints.append(
            Constraint(name, _merge_coefficients(coefficients), Relation(relation), to_fraction(rhs))
        )
        return len(self._constraints) - 1

    def set_objective(self, coefficients: Coefficients, sense: Sense = Sense.MIN, constant=0) -> None:
        self._objective = Objective(_merge_coefficients(coefficients), to_fraction(constant), Sense(sense))

    def build(self) -> MilpModel:
        model = MilpModel(self.name, tuple(self._variables), tuple(self._constraints), self._objective)
        logger.debug(
            f"Built model {self.name}: {len(model.variables)} variables, "
            f"{len(model.constraints)} constraints, {model.nonzeros} nonzeros"
        )
        return model


def validate_model(model: MilpModel) -> List[str]:
    """List structural defects of a model (empty list when well formed).

    Reports unknown variable references, empty constraints, inverted or
    non-binary bounds on binaries, and duplicate names.
    """
    defects: List[str] = []
    n = len(model.variables)
    seen = set()
    for j, var in enumerate(model.variables):
        if var.name in seen:
            defects.append(f"duplicate variable name {var.name!r}")
        seen.add(var.name)
        if var.lower is not None and var.upper is not None and var.lower > var.upper:
            defects.append(f"inverted bounds on {var.name}: lower {var.lower} > upper {var.upper}")
        if var.is_binary and not (0 <= var.lower <= var.upper <= 1):
            defects.append(f"binary {var.name} has bounds outside [0, 1]")
    names = set()
    for con in model.constraints:
        if con.name in names:
            defects.append(f"duplicate constraint name {con.name!r}")
        names.add(con.name)
        if not con.coefficients:
            defects.append(f"empty constraint {con.name}")
        for j, _ in con.coefficients:
            if not 0 <= j < n:
                defects.append(f"unknown variable index {j + 1} in constraint {con.name}")
    for j, _ in model.objective.coefficients:
        if not 0 <= j < n:
            defects.append(f"unknown variable index {j + 1} in objective")
    return defects


def check_model(model: MilpModel) -> None:
    """Raise ModelDefectError if validate_model reports anything."""
    defects = validate_model(model)
    if defects:
        raise ModelDefectError(f"model {model.name} is malformed", defects)
