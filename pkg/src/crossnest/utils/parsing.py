# src/crossnest/utils/parsing.py
from __future__ import annotations

from ..errors import InvalidPartitionError, NotAPermutationError


def parse_int_set(text: str) -> frozenset[int]:
    """``"1,3,4"``, ``"{1,3,4}"`` or ``""``."""
    body = text.strip().strip("{}[]").replace(" ", "")
    try:
        return frozenset(int(x) for x in body.split(",") if x)
    except ValueError as e:
        raise InvalidPartitionError(f"cannot read an integer set from {text!r}") from e


def parse_permutation(text: str) -> tuple[int, ...]:
    """One-line notation: ``231`` (single digits) or ``2,3,1``."""
    t = text.strip()
    try:
        values = tuple(int(x) for x in t.split(",")) if "," in t else tuple(int(ch) for ch in t)
    except ValueError as e:
        raise NotAPermutationError(f"cannot read a permutation from {text!r}") from e
    if sorted(values) != list(range(1, len(values) + 1)):
        raise NotAPermutationError(f"{text!r} is not a permutation of [{len(values)}]")
    return values


def looks_like_walk(text: str) -> bool:
    return "," in text or text.strip() in {"0", "∅"}
