"""Tests for the model layer, LP and branch and bound."""
