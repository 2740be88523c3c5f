"""Sidecar manifests.

The instance file format cannot tell discrete- from continuous-budgeted files
and carries no provenance, so every written instance gets a ``<file>.manifest``
next to it: plain ``key=value`` lines in a fixed order, ``#`` comments and blank
lines ignored on read.
"""

import logging
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import Field, ValidationError

from robust_selection_bench.errors import ParseError, format_validation_error
from robust_selection_bench.schemas import (
    BudgetMode,
    Criterion,
    DeltaSemantics,
    FrozenModel,
    HiroLineage,
    ProblemInstance,
    Provenance,
    format_rational,
)
from .canonical import content_hash
from .files import atomic_write_text, read_bytes

logger = logging.getLogger(__name__)

MANIFEST_SUFFIX = ".manifest"
MANIFEST_FORMAT = "robust-selection-bench/1"


class Manifest(FrozenModel):
    """Metadata stored next to an instance file."""

    criterion: Criterion
    uncertainty: Literal["discrete", "interval", "budgeted"]
    budget_mode: Optional[BudgetMode] = None
    delta_semantics: Optional[DeltaSemantics] = None
    generator: Optional[str] = None
    seed: Optional[int] = None
    hiro: Optional[HiroLineage] = None
    hash: str = Field(..., description="Content hash of the instance file bytes")

    @classmethod
    def for_instance(cls, inst: ProblemInstance, data: bytes) -> "Manifest":
        """Manifest describing an instance serialized to ``data``."""
        u = inst.uncertainty
        return cls(
            criterion=inst.criterion,
            uncertainty=u.kind,
            budget_mode=u.mode if u.kind == "budgeted" else None,
            delta_semantics=inst.delta_semantics,
            generator=inst.provenance.generator,
            seed=inst.provenance.seed,
            hiro=inst.provenance.hiro,
            hash=content_hash(data),
        )

    @property
    def provenance(self) -> Provenance:
        return Provenance(generator=self.generator, seed=self.seed, hiro=self.hiro)

    @property
    def sampled(self) -> bool:
        """True for untouched generator output (integer costs only)."""
        return self.generator is not None and self.hiro is None


def manifest_path(path: Union[str, Path]) -> Path:
    """Sidecar path for an instance file."""
    path = Path(path)
    return path.with_name(path.name + MANIFEST_SUFFIX)


def format_manifest(manifest: Manifest) -> str:
    """Render the key=value text of a manifest."""
    entries: List[Tuple[str, str]] = [
        ("format", MANIFEST_FORMAT),
        ("criterion", manifest.criterion.value),
        ("uncertainty", manifest.uncertainty),
    ]
    if manifest.budget_mode is not None:
        entries.append(("budget_mode", manifest.budget_mode.value))
    if manifest.delta_semantics is not None:
        entries.append(("delta_semantics", manifest.delta_semantics.value))
    if manifest.generator is not None:
        entries.append(("generator", manifest.generator))
    if manifest.seed is not None:
        entries.append(("seed", str(manifest.seed)))
    lineage = manifest.hiro
    if lineage is not None:
        entries.append(("hiro.parent_hash", lineage.parent_hash))
        entries.append(("hiro.b", format_rational(lineage.b)))
        entries.append(("hiro.mode", lineage.mode))
        entries.append(("hiro.iterations", str(lineage.iterations)))
        if lineage.permutation is not None:
            entries.append(("hiro.permutation", ",".join(str(i) for i in lineage.permutation)))
        for k, correction in enumerate(lineage.corrections, start=1):
            entries.append((f"hiro.correction.{k}", correction))
    entries.append(("hash", manifest.hash))
    return "".join(f"{key}={value}\n" for key, value in entries)


def write_manifest(manifest: Manifest, path: Union[str, Path]) -> Path:
    """Write the manifest for the instance file at ``path``."""
    target = manifest_path(path)
    atomic_write_text(target, format_manifest(manifest))
    return target


def _parse_entries(text: str, source: Path) -> Dict[str, str]:
    entries: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ParseError(f"{source}: expected key=value, got {raw!r}", line=number)
        if key in entries:
            raise ParseError(f"{source}: duplicate key {key!r}", line=number)
        entries[key] = value.strip()
    return entries


def parse_manifest(text: str, source: Union[str, Path] = "<manifest>") -> Manifest:
    """Parse manifest text.

    Raises:
        ParseError: If a line is malformed, a required key is missing or a value is invalid
    """
    source = Path(source)
    entries = _parse_entries(text, source)

    fmt = entries.pop("format", MANIFEST_FORMAT)
    if fmt != MANIFEST_FORMAT:
        raise ParseError(f"{source}: unsupported manifest format {fmt!r}")
    for key in ("criterion", "uncertainty", "hash"):
        if key not in entries:
            raise ParseError(f"{source}: missing required key {key!r}")

    data: Dict[str, object] = {
        key: entries.pop(key)
        for key in ("criterion", "uncertainty", "budget_mode", "delta_semantics", "generator", "seed", "hash")
        if key in entries
    }

    hiro_keys = sorted(key for key in entries if key.startswith("hiro."))
    if hiro_keys:
        corrections = sorted(
            (key for key in hiro_keys if key.startswith("hiro.correction.")),
            key=lambda key: int(key.rsplit(".", 1)[1]) if key.rsplit(".", 1)[1].isdigit() else 0,
        )
        permutation = entries.get("hiro.permutation")
        try:
            data["hiro"] = HiroLineage(
                parent_hash=entries.get("hiro.parent_hash", ""),
                b=entries.get("hiro.b", "0"),
                mode=entries.get("hiro.mode", ""),
                iterations=entries.get("hiro.iterations", "0"),
                permutation=tuple(int(i) for i in permutation.split(",")) if permutation else None,
                corrections=tuple(entries[key] for key in corrections),
            )
        except (ValidationError, ValueError) as e:
            errors = e.errors() if isinstance(e, ValidationError) else None
            raise ParseError(f"{source}: invalid hardening lineage: {format_validation_error(str(e), errors)}")
        for key in hiro_keys:
            entries.pop(key)

    for key in entries:
        logger.debug(f"Ignoring unknown manifest key {key!r} in {source}")

    try:
        return Manifest(**data)
    except ValidationError as e:
        raise ParseError(f"{source}: {format_validation_error(str(e), e.errors())}")


def read_manifest(path: Union[str, Path]) -> Optional[Manifest]:
    """Read the sidecar of an instance file, or None when there is none."""
    target = manifest_path(path)
    if not target.exists():
        return None
    try:
        text = read_bytes(target).decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{target}: manifest is not valid UTF-8")
    return parse_manifest(text, target)
