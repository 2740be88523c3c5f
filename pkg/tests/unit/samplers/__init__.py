"""Tests for the instance generators."""
