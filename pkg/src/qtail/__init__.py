"""Exact q-series engine for tails of colored Jones polynomials."""

__version__ = "0.1.0"
