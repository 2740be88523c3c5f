"""Tests for error formatting and handlers."""
