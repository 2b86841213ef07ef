"""Exact chromatic polynomials, chromatic root bounds, and log-concavity checks."""

__version__ = "0.1.0"
