# src/crossnest/errors.py
"""Domain errors raised by the combinatorial core.

Everything derives from :class:`CrossnestError` (itself a ``ValueError``) so the CLI can map
domain failures to exit code 1 without catching programming errors.
"""
from __future__ import annotations


class CrossnestError(ValueError):
    """Root of all domain errors."""


class InvalidShapeError(CrossnestError):
    pass


class InvalidTableauError(CrossnestError):
    pass


class DuplicateEntryError(CrossnestError):
    pass


class InvalidCornerError(CrossnestError):
    pass


class InvalidPartitionError(CrossnestError):
    pass


class NotAMatchingError(CrossnestError):
    pass


class NotAPermutationError(CrossnestError):
    pass


class StepViolationError(CrossnestError):
    """A walk breaks its step rule; ``index`` is the first offending shape position."""

    def __init__(self, index: int, message: str) -> None:
        super().__init__(f"step violation at index {index}: {message}")
        self.index = index


class NotClosedError(StepViolationError):
    pass


class SizeLimitError(CrossnestError):
    pass


class BoundExceededError(CrossnestError):
    pass


class CardinalityMismatchError(CrossnestError):
    pass


class InvalidProfileError(CrossnestError):
    pass


class CrossingBoundError(CrossnestError):
    pass


class PathsCrossError(CrossnestError):
    pass


class ParityError(CrossnestError):
    pass


class OddLengthError(CrossnestError):
    pass


class NonSquareMatrixError(CrossnestError):
    pass


class SymmetryViolationError(CrossnestError):
    pass


class ConsistencyError(CrossnestError):
    pass


class CacheFormatError(CrossnestError):
    pass


class InvalidArgumentError(CrossnestError):
    pass
