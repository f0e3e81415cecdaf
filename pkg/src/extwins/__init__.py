"""Exact computation of weighted extremal Kähler twins and extremal Sasaki twins."""

__version__ = "0.1.0"
