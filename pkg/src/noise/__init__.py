"""Trapped-ion fan-out noise model."""
