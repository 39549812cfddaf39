"""Noncommutative calculus and FRG beta functions for multimatrix models."""

__version__ = "0.1.0"
