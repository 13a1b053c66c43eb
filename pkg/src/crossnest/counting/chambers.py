# src/crossnest/counting/chambers.py
"""
Closed lattice walks in the chamber a_1 >= ... >= a_{k-1} >= 0, and the reflection sum for
walks confined to a strip of height k.
"""
from __future__ import annotations

import logging
from enum import Enum
from math import comb

from ..errors import InvalidArgumentError, OddLengthError

log = logging.getLogger("crossnest.chambers")

Point = tuple[int, ...]


class Stepping(str, Enum):
    # even steps stand or take -e_i, odd steps stand or take +e_i
    VACILLATING = "vacillating"
    # +-e_i on every step
    FREE = "free"


def _in_chamber(a: Point) -> bool:
    return all(x >= y for x, y in zip(a, a[1:])) and (not a or a[-1] >= 0)


def _moves(a: Point, sign: int) -> list[Point]:
    out = []
    for i in range(len(a)):
        b = a[:i] + (a[i] + sign,) + a[i + 1 :]
        if _in_chamber(b):
            out.append(b)
    return out


def chamber_walk_count(k: int, length: int, stepping: Stepping | str) -> int:
    """Closed walks of ``length`` steps from the origin inside the (k-1)-dimensional chamber."""
    stepping = Stepping(stepping)
    if k < 1:
        raise InvalidArgumentError(f"k must be at least 1, got {k}")
    if length < 0:
        raise OddLengthError(f"length must be non-negative, got {length}")
    if stepping is Stepping.FREE and length % 2:
        raise OddLengthError(f"free walks return to the origin only at even length, got {length}")

    origin: Point = (0,) * (k - 1)
    layer: dict[Point, int] = {origin: 1}
    for step in range(length):
        nxt: dict[Point, int] = {}
        for a, c in layer.items():
            if stepping is Stepping.FREE:
                targets = _moves(a, 1) + _moves(a, -1)
            elif step % 2 == 0:
                targets = [a] + _moves(a, -1)
            else:
                targets = [a] + _moves(a, 1)
            for b in targets:
                nxt[b] = nxt.get(b, 0) + c
        layer = nxt
    total = layer.get(origin, 0)
    log.debug(
        "chambers.count",
        extra={"k": k, "length": length, "stepping": stepping.value, "count": total},
    )
    return total


def _binom(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0


def gk1_reflection(k: int, m: int) -> int:
    """
    Up/down paths of length 2m from height 0 back to 0 that stay within [0, k]:
    sum over every integer i of C(2m, m - i(k+2)) - C(2m, m + i(k+2) + k + 1).
    """
    if k < 1 or m < 0:
        raise InvalidArgumentError(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    period = k + 2
    reach = m // period + 2
    return sum(
        _binom(2 * m, m - i * period) - _binom(2 * m, m + i * period + k + 1)
        for i in range(-reach, reach + 1)
    )
