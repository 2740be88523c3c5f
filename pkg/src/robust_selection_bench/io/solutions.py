"""Solution files: one line of n comma separated 0/1 indicators."""

from pathlib import Path
from typing import Union

from pydantic import ValidationError

from robust_selection_bench.errors import CardinalityError, ParseError, format_validation_error
from robust_selection_bench.schemas import SelectionSolution, SolutionRole

from .files import atomic_write_text, read_bytes


def write_solution(solution: SelectionSolution, path: Union[str, Path]) -> Path:
    """Write the indicator line of a solution."""
    return atomic_write_text(path, ",".join(str(v) for v in solution.chosen) + "\n")


def read_solution(
    path: Union[str, Path], n: int, p: int, role: SolutionRole = SolutionRole.FULL
) -> SelectionSolution:
    """Read an indicator line for an instance with n items.

    Raises:
        ParseError: If the file is not a single line of n indicators
        CardinalityError: If the indicators break the cardinality contract of the role
    """
    source = str(path)
    lines = [line.strip() for line in read_bytes(path).decode("ascii", errors="replace").splitlines()]
    lines = [line for line in lines if line]
    if len(lines) != 1:
        raise ParseError(f"{source}: expected one line of indicators, got {len(lines)}", line=2 if lines else 1)
    tokens = lines[0].split(",")
    if len(tokens) != n:
        raise ParseError(f"{source}:1: expected {n} indicators, got {len(tokens)}", line=1)
    chosen = []
    for field, token in enumerate(tokens, start=1):
        if token not in ("0", "1"):
            raise ParseError(f"{source}:1: field {field}: expected 0 or 1, got {token!r}", line=1)
        chosen.append(int(token))
    try:
        return SelectionSolution(chosen=tuple(chosen), p=p, role=role)
    except ValidationError as e:
        raise CardinalityError(format_validation_error(str(e), e.errors()), {"size": sum(chosen), "p": p})
