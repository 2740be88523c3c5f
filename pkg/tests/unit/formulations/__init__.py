"""Tests for breakpoint sets and compact formulations."""
