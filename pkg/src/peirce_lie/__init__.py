"""Exact computations with finite-dimensional associative algebras given by structure constants."""

__version__ = "0.1.0"
