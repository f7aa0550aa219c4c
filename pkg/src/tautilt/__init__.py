"""Exact-arithmetic toolkit for support tau-tilting pairs and two-term
silting complexes over finite-dimensional quiver algebras."""

__version__ = "0.1.0"
