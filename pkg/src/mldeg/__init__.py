"""Exact ML-degrees and algebraic degrees of semidefinite programming."""

__version__ = "0.1.0"
