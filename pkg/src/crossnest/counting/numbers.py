# src/crossnest/counting/numbers.py
from __future__ import annotations

from functools import lru_cache
from math import comb

from ..errors import InvalidArgumentError


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise InvalidArgumentError(f"stirling2 needs n, k >= 0, got ({n}, {k})")
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell numbers by B(n+1) = sum_k C(n, k) B(k)."""
    if n < 0:
        raise InvalidArgumentError(f"bell needs n >= 0, got {n}")
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell(k) for k in range(n))


def bnk(n: int, k: int) -> int:
    """Partitions of [n] with k distinguished blocks."""
    if n < 0 or k < 0:
        raise InvalidArgumentError(f"bnk needs n, k >= 0, got ({n}, {k})")
    return sum(comb(n, m) * stirling2(m, k) * bell(n - m) for m in range(n + 1))


def catalan(n: int) -> int:
    if n < 0:
        raise InvalidArgumentError(f"catalan needs n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def three_noncrossing_matchings(m: int) -> int:
    """C_m C_{m+2} - C_{m+1}^2."""
    return catalan(m) * catalan(m + 2) - catalan(m + 1) ** 2
