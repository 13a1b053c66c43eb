# src/crossnest/counting/__init__.py
"""Enumerative side: closed-form numbers, distribution tables, chamber walks, transfer matrices."""
