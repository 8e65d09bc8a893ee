"""Certify flat limits of disjoint lines on a quadric via weight-vector initial ideals."""

__version__ = "0.1.0"
