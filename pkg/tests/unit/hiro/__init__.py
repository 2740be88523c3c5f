"""Tests for perturbation neighborhoods and hardening."""
