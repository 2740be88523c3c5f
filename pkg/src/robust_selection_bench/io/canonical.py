"""Canonical text form of instances.

One serialization is used for instance files, content hashes and the
byte-equality checks of hardening and batch runs. A file is a header line
followed by cost lines; every line is a comma separated list of numbers
written as ``a`` or ``a/b`` in lowest terms and terminated by ``\\n``.
"""

import hashlib
from enum import Enum
from typing import Iterable, List

from robust_selection_bench.errors import UnsupportedPairingError
from robust_selection_bench.schemas import Criterion, ProblemInstance, format_rational

HASH_PREFIX = "sha256:"


class Layout(str, Enum):
    """Line layouts of instance files.

    SCENARIOS:            "n,p,N" then N scenario lines
    STAGED_SCENARIOS:     "n,p,N", first-stage costs, N scenario lines
    RECOVERABLE_SCENARIOS: "n,p,N,Δ", first-stage costs, N scenario lines
    INTERVAL:             "n,p", lower bounds, deviations
    BUDGETED:             "n,p,Γ", lower bounds, deviations
    STAGED_BUDGETED:      "n,p,Γ", first-stage costs, lower bounds, deviations
    RECOVERABLE_BUDGETED: "n,p,Γ,Δ", first-stage costs, lower bounds, deviations
    """

    SCENARIOS = "scenarios"
    STAGED_SCENARIOS = "staged-scenarios"
    RECOVERABLE_SCENARIOS = "recoverable-scenarios"
    INTERVAL = "interval"
    BUDGETED = "budgeted"
    STAGED_BUDGETED = "staged-budgeted"
    RECOVERABLE_BUDGETED = "recoverable-budgeted"

    @property
    def header_fields(self) -> int:
        if self == Layout.INTERVAL:
            return 2
        if self in (Layout.RECOVERABLE_SCENARIOS, Layout.RECOVERABLE_BUDGETED):
            return 4
        return 3

    @property
    def has_first_stage(self) -> bool:
        return self not in (Layout.SCENARIOS, Layout.INTERVAL, Layout.BUDGETED)

    @property
    def is_scenario_list(self) -> bool:
        return self in (Layout.SCENARIOS, Layout.STAGED_SCENARIOS, Layout.RECOVERABLE_SCENARIOS)


_LAYOUTS = {
    (Criterion.MIN_MAX, "discrete"): Layout.SCENARIOS,
    (Criterion.MIN_MAX_REGRET, "discrete"): Layout.SCENARIOS,
    (Criterion.TWO_STAGE, "discrete"): Layout.STAGED_SCENARIOS,
    (Criterion.RECOVERABLE, "discrete"): Layout.RECOVERABLE_SCENARIOS,
    (Criterion.MIN_MAX, "interval"): Layout.INTERVAL,
    (Criterion.MIN_MAX_REGRET, "interval"): Layout.INTERVAL,
    (Criterion.MIN_MAX, "budgeted"): Layout.BUDGETED,
    (Criterion.TWO_STAGE, "budgeted"): Layout.STAGED_BUDGETED,
    (Criterion.RECOVERABLE, "budgeted"): Layout.RECOVERABLE_BUDGETED,
}


def layout_for(criterion: Criterion, kind: str) -> Layout:
    """Layout used for a criterion and uncertainty kind.

    Raises:
        UnsupportedPairingError: If no file layout exists for the combination
    """
    try:
        return _LAYOUTS[(Criterion(criterion), kind)]
    except KeyError:
        raise UnsupportedPairingError(
            f"no file layout for {Criterion(criterion).value} x {kind}",
            {"criterion": Criterion(criterion).value, "uncertainty": kind},
        )


def format_line(values: Iterable) -> str:
    """Comma separated rationals, no trailing separator."""
    return ",".join(format_rational(v) for v in values)


def canonical_lines(inst: ProblemInstance) -> List[str]:
    """Lines of the instance file, without terminators."""
    u = inst.uncertainty
    layout = layout_for(inst.criterion, u.kind)

    header = [inst.n, inst.p]
    if layout.is_scenario_list:
        header.append(u.scenario_count)
    elif layout != Layout.INTERVAL:
        header.append(u.gamma)
    if inst.criterion == Criterion.RECOVERABLE:
        header.append(inst.delta)

    lines = [format_line(header)]
    if layout.has_first_stage:
        lines.append(format_line(inst.first_stage_costs))
    if layout.is_scenario_list:
        lines.extend(format_line(scenario) for scenario in u.scenarios)
    else:
        lines.append(format_line(u.lower))
        lines.append(format_line(u.deviation))
    return lines


def canonical_bytes(inst: ProblemInstance) -> bytes:
    """The exact bytes of the instance file."""
    return "".join(line + "\n" for line in canonical_lines(inst)).encode("ascii")


def content_hash(data: bytes) -> str:
    """Prefixed SHA-256 digest of raw bytes."""
    return HASH_PREFIX + hashlib.sha256(data).hexdigest()


def instance_hash(inst: ProblemInstance) -> str:
    """Content hash of the canonical bytes of an instance."""
    return content_hash(canonical_bytes(inst))


def instance_id(inst: ProblemInstance, length: int = 12) -> str:
    """Short stable identifier derived from the content hash."""
    return instance_hash(inst)[len(HASH_PREFIX):][:length]
