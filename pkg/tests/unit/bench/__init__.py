"""Tests for presets, the batch runner and summaries."""
