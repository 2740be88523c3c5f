"""Generator catalog: pairing, required shape parameters and documented invariants."""

from typing import Dict, List, Optional, Tuple

from pydantic import Field

from robust_selection_bench.schemas import BudgetMode, Criterion, FrozenModel, GeneratorId


class GeneratorSpec(FrozenModel):
    """One catalog row."""

    id: GeneratorId
    criterion: Criterion
    uncertainty: str = Field(..., description="discrete, interval or budgeted")
    budget_mode: Optional[BudgetMode] = None
    required: Tuple[str, ...] = Field(..., description="Shape parameters besides n, p and seed")
    invariants: str
    alias_of: Optional[GeneratorId] = Field(None, description="Generator whose cost sampling is reused")


_DISCRETE_INVARIANTS = {
    "U": "c in {1..100}",
    "1": "c in {1..10} or {91..100}",
    "2": "first n/2 items in {1..100}; c_i = 100 - c_(i-n/2) for the rest",
}
_STAGED_DISCRETE_INVARIANTS = {
    "U": "C, c in {1..100}",
    "1": "C in {45..55} or {25..75}; c in {C-5..C+5}, {1..10} or {91..100}",
    "2": "C in {1..100} or 50; C=50: c in {1..10} or {91..100}; else c in {C-5..C+5}, clamped at 0",
}
_BUDGET_INVARIANTS = {
    "U": "lower, dev in {1..100}",
    "1": "lower in {1..100}; lower + dev = 100",
    "2": "lower in {1..10}; dev in {99-lower..100}",
}
_REGRET_INVARIANTS = {
    "U": "lower, dev in {1..100}",
    "1": "(lower low, dev high) or (lower high, dev low); low {1..10}, high {91..100}",
    "2": "lower and dev both low or both high",
}
_STAGED_BUDGET_INVARIANTS = {
    "U": "C, lower, dev in {1..100}",
    "1": "C in {1..100}; lower in {1..10}; dev in {100-lower..100}",
    "2": "C in {1..100}; lower = 100 - C; dev in {lower..100}",
}

# family -> (criterion, uncertainty, budget mode, required, invariants, aliased family)
_FAMILIES = {
    "MM-D": (Criterion.MIN_MAX, "discrete", None, ("N",), _DISCRETE_INVARIANTS, None),
    "MM-B": (Criterion.MIN_MAX, "budgeted", BudgetMode.CONTINUOUS_ITEMS, ("gamma",), _BUDGET_INVARIANTS, None),
    "MMR-I": (Criterion.MIN_MAX_REGRET, "interval", None, (), _REGRET_INVARIANTS, None),
    "MMR-D": (Criterion.MIN_MAX_REGRET, "discrete", None, ("N",), _DISCRETE_INVARIANTS, "MM-D"),
    "2ST-D": (Criterion.TWO_STAGE, "discrete", None, ("N",), _STAGED_DISCRETE_INVARIANTS, None),
    "2ST-DB": (
        Criterion.TWO_STAGE, "budgeted", BudgetMode.DISCRETE_ITEMS, ("gamma",), _STAGED_BUDGET_INVARIANTS, None,
    ),
    "2ST-CB": (
        Criterion.TWO_STAGE, "budgeted", BudgetMode.VARIABLE_BUDGET, ("gamma",), _STAGED_BUDGET_INVARIANTS, "2ST-DB",
    ),
    "RR-D": (Criterion.RECOVERABLE, "discrete", None, ("N", "delta"), _STAGED_DISCRETE_INVARIANTS, "2ST-D"),
    "RR-DB": (
        Criterion.RECOVERABLE, "budgeted", BudgetMode.DISCRETE_ITEMS, ("gamma", "delta"),
        _STAGED_BUDGET_INVARIANTS, "2ST-DB",
    ),
    "RR-CB": (
        Criterion.RECOVERABLE, "budgeted", BudgetMode.VARIABLE_BUDGET, ("gamma", "delta"),
        _STAGED_BUDGET_INVARIANTS, "2ST-DB",
    ),
}


def _build_catalog() -> Dict[GeneratorId, GeneratorSpec]:
    catalog = {}
    for generator in GeneratorId:
        criterion, uncertainty, mode, required, invariants, alias = _FAMILIES[generator.family]
        catalog[generator] = GeneratorSpec(
            id=generator,
            criterion=criterion,
            uncertainty=uncertainty,
            budget_mode=mode,
            required=required,
            invariants=invariants[generator.variant],
            alias_of=GeneratorId(f"{alias}-{generator.variant}") if alias else None,
        )
    return catalog


CATALOG: Dict[GeneratorId, GeneratorSpec] = _build_catalog()


def catalog_rows() -> List[Dict[str, str]]:
    """Catalog as plain rows for tables and JSON output."""
    return [
        {
            "id": spec.id.value,
            "criterion": spec.criterion.value,
            "uncertainty": spec.uncertainty,
            "budget_mode": spec.budget_mode.value if spec.budget_mode else "",
            "params": ",".join(("n", "p") + spec.required),
            "invariants": spec.invariants,
            "alias_of": spec.alias_of.value if spec.alias_of else "",
        }
        for spec in CATALOG.values()
    ]


def format_catalog(rows: Optional[List[Dict[str, str]]] = None) -> str:
    """Fixed-width table of the catalog."""
    rows = rows if rows is not None else catalog_rows()
    columns = ("id", "criterion", "uncertainty", "budget_mode", "params", "invariants")
    widths = {c: max(len(c), *(len(row[c]) for row in rows)) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns).rstrip()]
    lines.append("  ".join("-" * widths[c] for c in columns))
    for row in rows:
        lines.append("  ".join(row[c].ljust(widths[c]) for c in columns).rstrip())
    return "\n".join(lines)
