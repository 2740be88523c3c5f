"""Tests for selection, robust evaluation and the oracle."""
