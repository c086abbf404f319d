"""Exact computations in Deligne's interpolation category Rep(S_t)."""

__version__ = "0.1.0"
