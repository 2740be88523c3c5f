"""Plain-text model dump for debugging.

Grammar (one item per line, sections in this order)::

    \\ <model name>
    Minimize | Maximize
     obj: <term> { + <term> } [ + <constant> ]
    Subject To
     <row name>: <term> { + <term> } <= | >= | = <rhs>
    Bounds
     <lower> <= <name> <= <upper>     (-inf / +inf for missing bounds)
    Binaries
     <name> ...
    End

A term is ``<coef> <name>``; coefficients are integers or ``a/b`` fractions.
"""

from pathlib import Path
from typing import Iterable, List, Tuple, Union

from robust_selection_bench.schemas import format_rational

from .model import MilpModel, Sense


def _expression(model: MilpModel, terms: Iterable[Tuple[int, object]]) -> str:
    parts = []
    for j, coef in terms:
        name = model.variables[j].name
        if not parts:
            parts.append(f"{format_rational(coef)} {name}")
        elif coef < 0:
            parts.append(f"- {format_rational(-coef)} {name}")
        else:
            parts.append(f"+ {format_rational(coef)} {name}")
    return " ".join(parts) if parts else "0"


def format_lp(model: MilpModel) -> str:
    """Render a model in the LP-style grammar above."""
    lines: List[str] = [f"\\ {model.name}"]
    lines.append("Maximize" if model.objective.sense == Sense.MAX else "Minimize")
    objective = _expression(model, model.objective.coefficients)
    if model.objective.constant:
        objective += f" + {format_rational(model.objective.constant)}"
    lines.append(f" obj: {objective}")
    lines.append("Subject To")
    for con in model.constraints:
        lines.append(
            f" {con.name}: {_expression(model, con.coefficients)} {con.relation.value} {format_rational(con.rhs)}"
        )
    lines.append("Bounds")
    for var in model.variables:
        if var.is_binary:
            continue
        lower = "-inf" if var.lower is None else format_rational(var.lower)
        upper = "+inf" if var.upper is None else format_rational(var.upper)
        lines.append(f" {lower} <= {var.name} <= {upper}")
    binaries = [var.name for var in model.variables if var.is_binary]
    if binaries:
        lines.append("Binaries")
        lines.append(" " + " ".join(binaries))
    lines.append("End")
    return "\n".join(lines) + "\n"


def dump_lp(model: MilpModel, path: Union[str, Path]) -> Path:
    """Write ``format_lp(model)`` to a file and return its path."""
    path = Path(path)
    path.write_text(format_lp(model), encoding="utf-8")
    return path
