"""Recipe-specific identities of sampled instances."""

from fractions import Fraction
from typing import List, Sequence, Tuple

from robust_selection_bench.schemas import GeneratorId, ProblemInstance

from .catalog import CATALOG
from .recipes import COST_CAP, FULL, HIGH, LOW

Range = Tuple[int, int]


def _within(value: Fraction, *ranges: Range) -> bool:
    return any(low <= value <= high for low, high in ranges)


def _check_ranges(label: str, values: Sequence[Fraction], *ranges: Range) -> List[str]:
    return [
        f"range: {label}[{i + 1}]={v} outside {' or '.join(f'{{{a}..{b}}}' for a, b in ranges)}"
        for i, v in enumerate(values)
        if not _within(v, *ranges)
    ]


def _discrete_violations(variant: str, scenarios) -> List[str]:
    found: List[str] = []
    for j, row in enumerate(scenarios, start=1):
        n = len(row)
        half = n // 2
        if variant == "U" or (variant == "2" and half == 0):
            found += _check_ranges(f"c^{j}", row, FULL)
        elif variant == "1":
            found += _check_ranges(f"c^{j}", row, LOW, HIGH)
        else:
            found += _check_ranges(f"c^{j}", row[:half], FULL)
            for i in range(half, n):
                if row[i] != 100 - row[i - half]:
                    found.append(f"symmetry: c^{j}[{i + 1}]={row[i]} != 100 - c^{j}[{i - half + 1}]")
    return found


def _staged_discrete_violations(variant: str, C, scenarios) -> List[str]:
    if variant == "U":
        found = _check_ranges("C", C, FULL)
        for j, row in enumerate(scenarios, start=1):
            found += _check_ranges(f"c^{j}", row, FULL)
        return found
    found = _check_ranges("C", C, (25, 75)) if variant == "1" else _check_ranges("C", C, FULL)
    for j, row in enumerate(scenarios, start=1):
        for i, (c, first) in enumerate(zip(row, C)):
            if variant == "1":
                allowed = ((first - 5, first + 5), LOW, HIGH)
            elif first == 50:
                allowed = (LOW, HIGH)
            else:
                allowed = ((max(first - 5, 0), min(first + 5, COST_CAP)),)
            if not _within(c, *allowed):
                found.append(f"range: c^{j}[{i + 1}]={c} not allowed for C={first}")
    return found


def _bounds_violations(family: str, variant: str, lower, deviation) -> List[str]:
    found: List[str] = []
    if variant == "U":
        return _check_ranges("lower", lower, FULL) + _check_ranges("dev", deviation, FULL)
    for i, (l, d) in enumerate(zip(lower, deviation), start=1):
        if family == "MM-B" and variant == "1":
            if not _within(l, FULL):
                found.append(f"range: lower[{i}]={l} outside {{1..100}}")
            if l + d != 100:
                found.append(f"upper bound: lower[{i}] + dev[{i}] = {l + d} != 100")
        elif family == "MM-B":
            if not _within(l, LOW) or not _within(d, (99 - l, 100)):
                found.append(f"range: (lower, dev)[{i}]=({l}, {d}) outside lower {{1..10}}, dev {{99-lower..100}}")
        elif variant == "1":
            if not ((_within(l, LOW) and _within(d, HIGH)) or (_within(l, HIGH) and _within(d, LOW))):
                found.append(f"range: (lower, dev)[{i}]=({l}, {d}) is not (low, high) or (high, low)")
        elif not ((_within(l, LOW) and _within(d, LOW)) or (_within(l, HIGH) and _within(d, HIGH))):
            found.append(f"range: (lower, dev)[{i}]=({l}, {d}) is not (low, low) or (high, high)")
    return found


def _staged_budget_violations(variant: str, C, lower, deviation) -> List[str]:
    found = _check_ranges("C", C, FULL)
    if variant == "U":
        return found + _check_ranges("lower", lower, FULL) + _check_ranges("dev", deviation, FULL)
    for i, (first, l, d) in enumerate(zip(C, lower, deviation), start=1):
        if variant == "1":
            if not _within(l, LOW) or not _within(d, (100 - l, 100)):
                found.append(f"range: (lower, dev)[{i}]=({l}, {d}) outside lower {{1..10}}, dev {{100-lower..100}}")
        else:
            if l != 100 - first:
                found.append(f"complement: lower[{i}]={l} != 100 - C[{i}]")
            if not _within(d, (l, 100)):
                found.append(f"range: dev[{i}]={d} outside {{lower..100}}")
    return found


def check_sampler_invariants(inst: ProblemInstance) -> List[str]:
    """Violations of the recorded generator's recipe (empty when the instance conforms)."""
    name = inst.provenance.generator
    if name is None:
        return ["provenance: no generator recorded"]
    try:
        generator = GeneratorId(name)
    except ValueError:
        return [f"provenance: unknown generator {name!r}"]
    spec = CATALOG[generator]
    u = inst.uncertainty
    if inst.criterion != spec.criterion or u.kind != spec.uncertainty:
        return [f"pairing: {generator.value} produces {spec.criterion.value} x {spec.uncertainty} instances"]
    if spec.budget_mode is not None and u.mode != spec.budget_mode:
        return [f"pairing: {generator.value} produces budget mode {spec.budget_mode.value}"]

    family, variant = generator.family, generator.variant
    if family in ("MM-D", "MMR-D"):
        return _discrete_violations(variant, u.scenarios)
    if family in ("2ST-D", "RR-D"):
        return _staged_discrete_violations(variant, inst.first_stage_costs, u.scenarios)
    if family in ("MM-B", "MMR-I"):
        return _bounds_violations(family, variant, u.lower, u.deviation)
    return _staged_budget_violations(variant, inst.first_stage_costs, u.lower, u.deviation)
