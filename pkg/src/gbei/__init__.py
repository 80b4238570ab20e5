"""Generalized binomial edge ideals: invariants, bounds and certificate checks."""

__version__ = "0.1.0"
