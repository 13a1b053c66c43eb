# src/crossnest/__init__.py
"""Crossings and nestings of set partitions and matchings, via walks on Young's lattice."""

__version__ = "0.1.0"
__all__ = ["__version__"]
