"""Reading and writing instance files.

Files follow the layouts of :class:`Layout`. Writing always produces the
canonical bytes plus a manifest; reading accepts ``\\r\\n`` line endings and a
missing final newline but nothing else that deviates from the grammar, and
reports the 1-based line of the first defect.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import ValidationError

from robust_selection_bench.errors import IntegrityError, ParseError, format_validation_error
from robust_selection_bench.schemas import (
    BudgetMode,
    Criterion,
    DeltaSemantics,
    ProblemInstance,
    Provenance,
)
from .canonical import Layout, canonical_bytes, content_hash, layout_for
from .files import atomic_write_bytes, read_bytes
from .manifest import Manifest, manifest_path, read_manifest, write_manifest

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r"0|[1-9][0-9]*")
_RATIONAL = re.compile(r"(0|[1-9][0-9]*)/([1-9][0-9]*)")


def write_instance(inst: ProblemInstance, path: Union[str, Path]) -> Tuple[Path, Path]:
    """Write the canonical instance file and its manifest.

    Returns:
        Paths of the instance file and the manifest

    Raises:
        UnsupportedPairingError: If the pairing has no file layout
        RobustSelectionError: On I/O failure
    """
    path = Path(path)
    data = canonical_bytes(inst)
    atomic_write_bytes(path, data)
    sidecar = write_manifest(Manifest.for_instance(inst, data), path)
    logger.info(f"Wrote {inst.pairing.value} instance to {path}")
    return path, sidecar


class _Reader:
    """Line cursor over the text of one instance file."""

    def __init__(self, text: str, source: str, integers_only: bool) -> None:
        self.source = source
        self.integers_only = integers_only
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        self.lines = [line[:-1] if line.endswith("\r") else line for line in lines]

    def error(self, message: str, line: Optional[int]) -> ParseError:
        where = f":{line}" if line is not None else ""
        return ParseError(f"{self.source}{where}: {message}", line=line)

    def tokens(self, number: int) -> List[str]:
        if number > len(self.lines):
            raise self.error(
                f"file ends after line {len(self.lines)}, expected at least {number} lines", number
            )
        line = self.lines[number - 1]
        if line == "":
            raise self.error("empty line", number)
        return line.split(",")

    def number(self, token: str, number: int, field: int) -> Fraction:
        if _INTEGER.fullmatch(token):
            return Fraction(int(token))
        match = _RATIONAL.fullmatch(token)
        if match and not self.integers_only:
            value = Fraction(int(match.group(1)), int(match.group(2)))
            if value.denominator != int(match.group(2)) or value.denominator == 1:
                raise self.error(f"field {field}: rational {token!r} is not in lowest terms", number)
            return value
        expected = "a non-negative integer" if self.integers_only else "a non-negative integer or a/b"
        raise self.error(f"field {field}: expected {expected}, got {token!r}", number)

    def integer(self, token: str, number: int, field: int) -> int:
        if not _INTEGER.fullmatch(token):
            raise self.error(f"field {field}: expected a non-negative integer, got {token!r}", number)
        return int(token)

    def vector(self, number: int, n: int) -> Tuple[Fraction, ...]:
        tokens = self.tokens(number)
        if len(tokens) != n:
            raise self.error(f"expected {n} values, got {len(tokens)}", number)
        return tuple(self.number(token, number, j) for j, token in enumerate(tokens, start=1))


def _resolve_layout(
    reader: _Reader, criterion: Optional[Criterion], budget_mode: Optional[BudgetMode]
) -> Tuple[Criterion, str]:
    """Pick criterion and uncertainty kind for a file without manifest."""
    header = reader.tokens(1)
    if criterion is None:
        if len(header) == 2 and budget_mode is None:
            return Criterion.MIN_MAX_REGRET, "interval"
        raise ParseError(
            f"{reader.source}: ambiguous budget mode: no manifest and the layout cannot be told "
            "from the header; pass a criterion and a budget mode"
        )
    if budget_mode is not None:
        return criterion, "budgeted"
    if len(header) == 2 and criterion in (Criterion.MIN_MAX, Criterion.MIN_MAX_REGRET):
        return criterion, "interval"

    layout = layout_for(criterion, "discrete")
    offset = 2 if layout.has_first_stage else 1
    declared = header[2] if len(header) > 2 and _INTEGER.fullmatch(header[2]) else None
    fits_scenarios = declared is not None and len(reader.lines) == offset + int(declared)
    fits_budgeted = criterion != Criterion.MIN_MAX_REGRET and len(reader.lines) == offset + 2
    if fits_budgeted and not fits_scenarios:
        raise ParseError(
            f"{reader.source}: ambiguous budget mode: the file has the budgeted layout but no "
            "manifest; pass a budget mode"
        )
    return criterion, "discrete"


def parse_instance(
    text: str,
    criterion: Criterion,
    kind: str,
    budget_mode: Optional[BudgetMode] = None,
    delta_semantics: Optional[DeltaSemantics] = None,
    provenance: Optional[Provenance] = None,
    integers_only: bool = False,
    source: str = "<instance>",
) -> ProblemInstance:
    """Parse instance text in a known layout.

    Raises:
        ParseError: On any grammar, count or range defect, naming the line
    """
    reader = _Reader(text, source, integers_only)
    layout = layout_for(criterion, kind)

    header = reader.tokens(1)
    if len(header) != layout.header_fields:
        raise reader.error(
            f"header has {len(header)} fields, the {layout.value} layout needs {layout.header_fields}", 1
        )
    n = reader.integer(header[0], 1, 1)
    p = reader.integer(header[1], 1, 2)
    if n < 1:
        raise reader.error("n must be at least 1", 1)
    if not 1 <= p <= n:
        raise reader.error(f"p must satisfy 1 <= p <= n, got p={p}, n={n}", 1)

    scenario_count = None
    gamma = None
    delta = None
    if layout.is_scenario_list:
        scenario_count = reader.integer(header[2], 1, 3)
        if scenario_count < 1:
            raise reader.error("N must be at least 1", 1)
    elif layout != Layout.INTERVAL:
        gamma = reader.number(header[2], 1, 3)
        mode = budget_mode or BudgetMode.CONTINUOUS_ITEMS
        if mode != BudgetMode.VARIABLE_BUDGET and gamma > n:
            raise reader.error(f"gamma must not exceed n={n} in mode {mode.value}", 1)
        if mode == BudgetMode.DISCRETE_ITEMS and gamma.denominator != 1:
            raise reader.error("gamma must be integral in mode DiscreteItems", 1)
    if criterion == Criterion.RECOVERABLE:
        delta = reader.integer(header[3], 1, 4)
        if delta > p:
            raise reader.error(f"delta must satisfy 0 <= delta <= p, got {delta}", 1)

    number = 2
    first_stage = None
    if layout.has_first_stage:
        first_stage = reader.vector(number, n)
        number += 1

    uncertainty: Dict[str, object]
    if layout.is_scenario_list:
        scenarios = []
        for _ in range(scenario_count):
            scenarios.append(reader.vector(number, n))
            number += 1
        uncertainty = {"kind": "discrete", "scenarios": tuple(scenarios)}
    else:
        lower = reader.vector(number, n)
        deviation = reader.vector(number + 1, n)
        number += 2
        uncertainty = {"kind": kind, "lower": lower, "deviation": deviation}
        if kind == "budgeted":
            uncertainty["gamma"] = gamma
            uncertainty["mode"] = budget_mode or BudgetMode.CONTINUOUS_ITEMS

    if len(reader.lines) >= number:
        detail = f"; the header declares N={scenario_count} scenarios" if scenario_count is not None else ""
        raise reader.error(f"unexpected extra line{detail}", number)

    try:
        return ProblemInstance(
            n=n,
            p=p,
            criterion=criterion,
            uncertainty=uncertainty,
            first_stage_costs=first_stage,
            delta=delta,
            delta_semantics=delta_semantics,
            provenance=provenance or Provenance(),
        )
    except ValidationError as e:
        raise ParseError(f"{source}: {format_validation_error(str(e), e.errors())}")


def _decode(data: bytes, source: str) -> str:
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as e:
        line = data[: e.start].count(b"\n") + 1
        raise ParseError(f"{source}:{line}: non-ASCII byte in instance file", line=line)


def read_instance(
    path: Union[str, Path],
    criterion: Optional[Union[Criterion, str]] = None,
    budget_mode: Optional[Union[BudgetMode, str]] = None,
    delta_semantics: Optional[Union[DeltaSemantics, str]] = None,
) -> ProblemInstance:
    """Read an instance file and verify it against its manifest.

    The hints are only needed for files without a manifest; when a manifest
    exists they must agree with it.

    Raises:
        ParseError: If the file or manifest is malformed, or the layout is ambiguous
        IntegrityError: If the manifest hash does not match the file
    """
    path = Path(path)
    source = str(path)
    criterion = Criterion(criterion) if criterion is not None else None
    budget_mode = BudgetMode(budget_mode) if budget_mode is not None else None
    delta_semantics = DeltaSemantics(delta_semantics) if delta_semantics is not None else None

    data = read_bytes(path)
    text = _decode(data, source)
    manifest = read_manifest(path)

    if manifest is None:
        logger.debug(f"No manifest next to {path}; reading with hints")
        criterion, kind = _resolve_layout(_Reader(text, source, False), criterion, budget_mode)
        inst = parse_instance(
            text,
            criterion,
            kind,
            budget_mode=budget_mode,
            delta_semantics=delta_semantics,
            source=source,
        )
        return inst

    for name, hint, stored in (
        ("criterion", criterion, manifest.criterion),
        ("budget mode", budget_mode, manifest.budget_mode),
        ("delta semantics", delta_semantics, manifest.delta_semantics),
    ):
        if hint is not None and hint != stored:
            stored_text = stored.value if stored is not None else "none"
            raise ParseError(
                f"{source}: {name} {hint.value} contradicts the manifest ({stored_text})"
            )

    inst = parse_instance(
        text,
        manifest.criterion,
        manifest.uncertainty,
        budget_mode=manifest.budget_mode,
        delta_semantics=manifest.delta_semantics,
        provenance=manifest.provenance,
        integers_only=manifest.sampled,
        source=source,
    )
    actual = content_hash(data)
    if actual != manifest.hash:
        raise IntegrityError(
            f"{source}: content hash {actual} does not match manifest {manifest_path(path).name} "
            f"({manifest.hash})",
            {"expected": manifest.hash, "actual": actual},
        )
    if data != canonical_bytes(inst):
        logger.warning(f"{path} is readable but not in canonical form")
    return inst
