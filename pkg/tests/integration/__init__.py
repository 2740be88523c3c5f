"""Integration tests: several modules together on random instances."""
