"""Tests for the command registry."""
