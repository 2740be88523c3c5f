"""Built models together with their symbol map and solution extraction."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from robust_selection_bench.errors import SolverError
from robust_selection_bench.milp import MilpModel, ModelBuilder, VariableKind
from robust_selection_bench.schemas import Pairing, SelectionSolution, SolutionRole, SolveResult

from .breakpoints import BreakpointSet

logger = logging.getLogger(__name__)

SYMBOLS = {
    "alpha": "α",
    "beta": "β",
    "gamma": "γ",
    "eta": "η",
    "lambda": "λ",
    "pi": "π",
    "rho": "ρ",
}


def variable_name(symbol: str, *index: int) -> str:
    """``symbol[i,j]`` with the given (1-based) indices, or the bare symbol."""
    if not index:
        return symbol
    return f"{symbol}[{','.join(str(k) for k in index)}]"


class FormulationBuilder(ModelBuilder):
    """ModelBuilder that records a symbol map while adding variables."""

    def __init__(self, name: str):
        super().__init__(name)
        self.varmap: Dict[str, str] = {}

    def var(self, symbol: str, *index: int, lower=0, upper=None, binary: bool = False) -> int:
        name = variable_name(symbol, *index)
        kind = VariableKind.BINARY if binary else VariableKind.CONTINUOUS
        j = self.add_variable(name, lower=lower, upper=upper, kind=kind)
        self.varmap[variable_name(SYMBOLS.get(symbol, symbol), *index)] = name
        return j

    def selection(self, n: int, symbol: str = "x") -> Tuple[int, ...]:
        """Binary indicator columns symbol[1..n]."""
        return tuple(self.var(symbol, i + 1, binary=True) for i in range(n))


@dataclass(frozen=True)
class ModelBundle:
    """A formulation: the model, its symbol map and how to read x back."""

    model: MilpModel
    pairing: Pairing
    n: int
    p: int
    role: SolutionRole = SolutionRole.FULL
    varmap: Dict[str, str] = field(default_factory=dict)
    breakpoints: Optional[BreakpointSet] = None

    @property
    def x_names(self) -> Tuple[str, ...]:
        return tuple(variable_name("x", i + 1) for i in range(self.n))

    def extract(self, result: SolveResult, integrality_tol: float = 1e-6) -> SelectionSolution:
        """Round x at ``integrality_tol`` into a SelectionSolution.

        Raises:
            SolverError: If the result has no assignment or x is not integral
        """
        if result.assignment is None:
            raise SolverError(f"{self.model.name}: no assignment to extract ({result.status.value})")
        items = []
        for i, name in enumerate(self.x_names):
            value = result.assignment[name]
            rounded = round(value)
            if abs(value - rounded) > integrality_tol or rounded not in (0, 1):
                raise SolverError(f"{self.model.name}: {name}={value} is not integral")
            if rounded == 1:
                items.append(i)
        try:
            return SelectionSolution.from_items(items, self.n, self.p, self.role)
        except ValueError as e:
            raise SolverError(f"{self.model.name}: extracted solution violates its cardinality: {e}")
