"""Tests for instance, manifest, solution and results files."""
