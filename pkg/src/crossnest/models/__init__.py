# src/crossnest/models/__init__.py
"""JSON contracts for everything the CLI prints."""
