"""Tests for utility helpers."""
