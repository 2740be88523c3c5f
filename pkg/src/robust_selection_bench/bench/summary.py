"""Per-cell aggregation of benchmark records."""

import logging
from pathlib import Path
from typing import Sequence, Union

import pandas as pd

from robust_selection_bench.io import atomic_write_text, results_frame
from robust_selection_bench.schemas import ERROR_STATUS, ResultRecord, SolveStatus

logger = logging.getLogger(__name__)

CELL_COLUMNS = ["generator", "n", "p", "N", "gamma", "delta", "b", "hiro_mode"]
SUMMARY_COLUMNS = CELL_COLUMNS + [
    "count",
    "optimal",
    "errors",
    "mean_time_s",
    "median_time_s",
    "mean_nodes",
    "median_nodes",
]
SUMMARY_SUFFIX = ".summary.csv"


def summarize(records: Sequence[ResultRecord]) -> pd.DataFrame:
    """Count, Optimal count, and mean/median of wall time and nodes per cell.

    Error rows count towards ``count`` and ``errors`` only.
    """
    frame = results_frame(records)
    if frame.empty:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)
    failed = frame["status"] == ERROR_STATUS
    frame["optimal"] = frame["status"] == SolveStatus.OPTIMAL.value
    frame["errors"] = failed
    frame["wall_time_s"] = pd.to_numeric(frame["wall_time_s"]).where(~failed)
    frame["nodes"] = pd.to_numeric(frame["nodes"]).where(~failed)

    grouped = frame.groupby(CELL_COLUMNS, sort=True)
    summary = grouped.agg(
        count=("status", "size"),
        optimal=("optimal", "sum"),
        errors=("errors", "sum"),
        mean_time_s=("wall_time_s", "mean"),
        median_time_s=("wall_time_s", "median"),
        mean_nodes=("nodes", "mean"),
        median_nodes=("nodes", "median"),
    ).reset_index()
    return summary[SUMMARY_COLUMNS]


def summary_path(results_path: Union[str, Path]) -> Path:
    """``runs/exp.csv`` -> ``runs/exp.summary.csv``."""
    path = Path(results_path)
    return path.with_name(path.stem + SUMMARY_SUFFIX)


def write_summary(records: Sequence[ResultRecord], path: Union[str, Path]) -> Path:
    path = Path(path)
    text = summarize(records).to_csv(index=False, lineterminator="\n", float_format="%.6g")
    atomic_write_text(path, text)
    logger.info(f"Wrote summary of {len(records)} records to {path}")
    return path
