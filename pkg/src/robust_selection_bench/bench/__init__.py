"""Benchmark harness: presets, batch runner and per-cell summaries."""

from .presets import (
    PRESETS,
    Preset,
    expand_config,
    get_preset,
    preset_config,
    preset_rows,
    scale_tuple,
)
from .runner import BenchTask, expand_tasks, expected_record_count, run_experiment, run_task, sort_records
from .summary import SUMMARY_COLUMNS, summarize, summary_path, write_summary

__all__ = [
    "BenchTask",
    "PRESETS",
    "Preset",
    "SUMMARY_COLUMNS",
    "expand_config",
    "expand_tasks",
    "expected_record_count",
    "get_preset",
    "preset_config",
    "preset_rows",
    "run_experiment",
    "run_task",
    "scale_tuple",
    "sort_records",
    "summarize",
    "summary_path",
    "write_summary",
]
