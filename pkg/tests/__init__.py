"""Test package for the discrete expansion engine."""
