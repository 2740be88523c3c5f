"""Results tables."""

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import pandas as pd

from robust_selection_bench.errors import ParseError
from robust_selection_bench.schemas import RESULT_COLUMNS, ResultRecord, format_rational

from .files import atomic_write_text, read_bytes

logger = logging.getLogger(__name__)


def _cell(value) -> str:
    return "" if value is None else str(value)


def _objective(record: ResultRecord) -> str:
    if record.exact_objective is not None:
        return format_rational(record.exact_objective)
    if record.objective is None:
        return ""
    return f"{record.objective:.9g}"


def results_frame(records: Sequence[ResultRecord]) -> pd.DataFrame:
    """Records as a string table in the fixed column order."""
    rows = [
        {
            "instance_id": record.instance_id,
            "generator": record.generator,
            "n": str(record.n),
            "p": str(record.p),
            "N": _cell(record.N),
            "gamma": format_rational(record.gamma) if record.gamma is not None else "",
            "delta": _cell(record.delta),
            "b": format_rational(record.b) if record.b is not None else "",
            "hiro_mode": _cell(record.hiro_mode),
            "status": record.status,
            "objective": _objective(record),
            "wall_time_s": f"{record.wall_time_s:.3f}",
            "nodes": str(record.nodes),
            "seed": _cell(record.seed),
        }
        for record in records
    ]
    return pd.DataFrame(rows, columns=list(RESULT_COLUMNS), dtype=str)


def format_results(records: Sequence[ResultRecord]) -> str:
    """CSV text of the records: header plus one line per record."""
    return results_frame(records).to_csv(index=False, lineterminator="\n")


def write_results(records: Sequence[ResultRecord], path: Union[str, Path]) -> Path:
    """Write the results CSV.

    Raises:
        RobustSelectionError: On I/O failure
    """
    path = Path(path)
    atomic_write_text(path, format_results(records))
    logger.info(f"Wrote {len(records)} result rows to {path}")
    return path


def load_results(path: Union[str, Path], columns: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Read a results CSV back as a string table.

    Raises:
        ParseError: If the header does not match the results schema
    """
    text = read_bytes(path).decode("utf-8")
    header = text.split("\n", 1)[0].split(",")
    expected = list(columns or RESULT_COLUMNS)
    if header != expected:
        raise ParseError(f"{path}:1: unexpected results header {','.join(header)}", line=1)
    return pd.read_csv(path, dtype=str, keep_default_na=False)
