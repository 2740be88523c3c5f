"""Unit tests for robust-selection-bench."""
