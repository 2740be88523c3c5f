"""Instance files, manifests, solution files and results tables."""

from .canonical import (
    HASH_PREFIX,
    Layout,
    canonical_bytes,
    canonical_lines,
    content_hash,
    instance_hash,
    instance_id,
    layout_for,
)
from .files import atomic_write_bytes, atomic_write_text
from .manifest import Manifest, format_manifest, manifest_path, parse_manifest, read_manifest, write_manifest
from .instances import parse_instance, read_instance, write_instance
from .solutions import read_solution, write_solution
from .results import format_results, load_results, results_frame, write_results

__all__ = [
    "HASH_PREFIX",
    "Layout",
    "Manifest",
    "atomic_write_bytes",
    "atomic_write_text",
    "canonical_bytes",
    "canonical_lines",
    "content_hash",
    "format_manifest",
    "format_results",
    "instance_hash",
    "instance_id",
    "layout_for",
    "load_results",
    "manifest_path",
    "parse_instance",
    "parse_manifest",
    "read_instance",
    "read_manifest",
    "read_solution",
    "results_frame",
    "write_instance",
    "write_manifest",
    "write_results",
    "write_solution",
]
