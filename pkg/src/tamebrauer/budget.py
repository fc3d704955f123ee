"""Enumeration budget shared by the exhaustive sweeps."""

import os

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    """``TAMEBRAUER_BUDGET`` if set, else 10^6."""
    raw = os.environ.get("TAMEBRAUER_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError("TAMEBRAUER_BUDGET must be a positive integer")
    return value
