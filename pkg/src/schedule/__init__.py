"""Moment scheduling, commutation rules and fan-out alignment."""
