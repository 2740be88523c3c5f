"""Tests for the pydantic schemas."""
