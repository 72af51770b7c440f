"""Tests for rlcongest."""
