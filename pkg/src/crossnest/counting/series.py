# src/crossnest/counting/series.py
"""
Exact polynomials and truncated power series over the rationals, and the hyperbolic Bessel
determinant whose coefficients count k-noncrossing matchings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import ConsistencyError, InvalidArgumentError

Number = int | Fraction


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True, slots=True)
class ExactPoly:
    """Polynomial with rational coefficients, constant term first, no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def of(cls, *coeffs: Number) -> "ExactPoly":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def product(cls, factors: Iterable["ExactPoly"]) -> "ExactPoly":
        out = cls.of(1)
        for f in factors:
            out = out * f
        return out

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ConsistencyError(f"{self} has non-integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def even_part(self) -> "ExactPoly":
        """Substitute t^2 -> x; every odd coefficient must vanish."""
        odd = [i for i in range(1, len(self.coeffs), 2) if self.coeffs[i]]
        if odd:
            raise ConsistencyError(f"odd-degree coefficients at {odd} do not vanish")
        return ExactPoly(self.coeffs[::2])

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        if not self.coeffs or not other.coeffs:
            return ExactPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPoly(tuple(out))

    def __pow__(self, e: int) -> "ExactPoly":
        return ExactPoly.product([self] * e)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_strings(self) -> list[str]:
        return [_fmt(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(_fmt(c) + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True, slots=True)
class ExactSeries:
    """Power series known modulo x^order; ``coeffs`` has exactly ``order`` entries."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise InvalidArgumentError(f"truncation order must be non-negative, got {self.order}")
        padded = [Fraction(c) for c in self.coeffs[: self.order]]
        padded += [Fraction(0)] * (self.order - len(padded))
        object.__setattr__(self, "coeffs", tuple(padded))

    @classmethod
    def from_poly(cls, p: ExactPoly, order: int) -> "ExactSeries":
        return cls(p.coeffs, order)

    @classmethod
    def constant(cls, c: Number, order: int) -> "ExactSeries":
        return cls((Fraction(c),), order)

    def coefficient(self, i: int) -> Fraction:
        if i >= self.order:
            raise InvalidArgumentError(f"coefficient {i} is beyond truncation order {self.order}")
        return self.coeffs[i]

    def _pair(self, other: "ExactSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "ExactSeries") -> "ExactSeries":
        n = self._pair(other)
        return ExactSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)), n)

    def __neg__(self) -> "ExactSeries":
        return ExactSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "ExactSeries") -> "ExactSeries":
        return self + (-other)

    def __mul__(self, other: "ExactSeries") -> "ExactSeries":
        n = self._pair(other)
        out = [Fraction(0)] * n
        for i in range(n):
            a = self.coeffs[i]
            if a:
                for j in range(n - i):
                    out[i + j] += a * other.coeffs[j]
        return ExactSeries(tuple(out), n)

    def inverse(self) -> "ExactSeries":
        if self.order == 0:
            return self
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        out = [Fraction(0)] * self.order
        out[0] = 1 / c0
        for i in range(1, self.order):
            acc = sum((self.coeffs[k] * out[i - k] for k in range(1, i + 1)), Fraction(0))
            out[i] = -acc / c0
        return ExactSeries(tuple(out), self.order)

    def __truediv__(self, other: "ExactSeries") -> "ExactSeries":
        return self * other.inverse()

    def to_strings(self) -> list[str]:
        return [_fmt(c) for c in self.coeffs]


def bessel_series(order_m: int, truncation: int) -> ExactSeries:
    """I_m(2x) = sum_j x^(m+2j) / (j! (m+j)!) modulo x^truncation; I_-m = I_m."""
    m = abs(order_m)
    coeffs = [Fraction(0)] * truncation
    j = 0
    while m + 2 * j < truncation:
        coeffs[m + 2 * j] = Fraction(1, math.factorial(j) * math.factorial(m + j))
        j += 1
    return ExactSeries(tuple(coeffs), truncation)


def series_determinant(matrix: Sequence[Sequence[ExactSeries]], order: int) -> ExactSeries:
    """Cofactor expansion along the first row."""
    size = len(matrix)
    if size == 0:
        return ExactSeries.constant(1, order)
    if size == 1:
        return matrix[0][0]
    acc = ExactSeries((), order)
    for col in range(size):
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = matrix[0][col] * series_determinant(minor, order)
        acc = acc + term if col % 2 == 0 else acc - term
    return acc


def fk_series(k: int, truncation: int) -> ExactSeries:
    """det[I_{i-j}(2x) - I_{i+j}(2x)] for i, j = 1..k-1, modulo x^truncation."""
    if k < 1:
        raise InvalidArgumentError(f"k must be at least 1, got {k}")
    rows = [
        [
            bessel_series(i - j, truncation) - bessel_series(i + j, truncation)
            for j in range(1, k)
        ]
        for i in range(1, k)
    ]
    return series_determinant(rows, truncation)


def matching_count(k: int, m: int) -> int:
    """k-noncrossing matchings on [2m], read off the exponential generating function F_k."""
    c = fk_series(k, 2 * m + 1).coefficient(2 * m) * math.factorial(2 * m)
    if c.denominator != 1:
        raise ConsistencyError(f"F_{k} coefficient at x^{2 * m} is not integral after scaling")
    return c.numerator
