# src/crossnest/counting/transfer.py
"""
Transfer matrices on L(k, j), the lattice of shapes inside a k x j box.

Walks from ∅ to ∅ on the Hasse diagram of L(k, j) are oscillating tableaux, hence count
matchings with cr <= k and ne <= j. Exact characteristic polynomials and ranks go through
sympy's DomainMatrix over ZZ; the spectral check uses numpy.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..engine.walks import WalkKind, walk_distribution
from ..engine.young import EMPTY, Shape, iter_box_shapes, up_covers
from ..errors import (
    BoundExceededError,
    ConsistencyError,
    InvalidArgumentError,
    NonSquareMatrixError,
)
from ..settings import get_settings
from .series import ExactPoly, ExactSeries

log = logging.getLogger("crossnest.transfer")


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Square integer matrix with the shape labelling its rows and columns."""

    rows: tuple[tuple[int, ...], ...]
    legend: tuple[Shape, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            lengths = sorted({len(r) for r in rows})
            raise NonSquareMatrixError(f"{len(rows)} rows of lengths {lengths} is not square")
        if self.legend and len(self.legend) != len(rows):
            raise NonSquareMatrixError("legend length differs from the matrix dimension")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "legend", tuple(self.legend))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.dim) for j in range(i))

    @property
    def edge_count(self) -> int:
        return sum(self.rows[i][j] for i in range(self.dim) for j in range(i))

    def permuted(self, order: Sequence[int]) -> "IntMatrix":
        """Relabel: row/column ``order[a]`` becomes row/column ``a``."""
        rows = tuple(tuple(self.rows[i][j] for j in order) for i in order)
        legend = tuple(self.legend[i] for i in order) if self.legend else ()
        return IntMatrix(rows, legend)

    def without(self, index: int) -> "IntMatrix":
        keep = [i for i in range(self.dim) if i != index]
        return self.permuted(keep)

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in r] for r in self.rows], (self.dim, self.dim), ZZ)


def _check_box(k: int, j: int) -> None:
    if k < 1 or j < 1:
        raise InvalidArgumentError(f"k and j must be at least 1, got ({k}, {j})")


@lru_cache(maxsize=32)
def rect_lattice(k: int, j: int) -> tuple[IntMatrix, IntMatrix]:
    """(A_{k,j}, A_{k,j}(0)): the Hasse diagram of L(k, j), then the same with ∅ deleted."""
    _check_box(k, j)
    shapes = sorted(iter_box_shapes(k, j), key=lambda s: s.parts)
    index = {s: i for i, s in enumerate(shapes)}
    size = len(shapes)
    rows = [[0] * size for _ in range(size)]
    for s in shapes:
        for u in up_covers(s):
            if u in index:
                rows[index[s]][index[u]] = rows[index[u]][index[s]] = 1
    full = IntMatrix(tuple(tuple(r) for r in rows), tuple(shapes))
    log.debug("transfer.lattice", extra={"k": k, "j": j, "dim": size, "edges": full.edge_count})
    return full, full.without(index[EMPTY])


def char_poly(a: IntMatrix) -> ExactPoly:
    """det(I - tA), constant term first, by a division-free algorithm over ZZ."""
    if a.dim == 0:
        return ExactPoly.of(1)
    # charpoly gives det(xI - A) leading coefficient first; reading it constant-first is
    # exactly t^n det(I/t - A) = det(I - tA)
    coeffs = a.to_domain().charpoly()
    return ExactPoly.of(*(int(c) for c in coeffs))


@lru_cache(maxsize=32)
def p_kj(k: int, j: int) -> ExactPoly:
    """p_{k,j}(x) with det(I - tA_{k,j}) = p_{k,j}(t^2)."""
    full, _ = rect_lattice(k, j)
    return char_poly(full).even_part()


def _rank_rows(rows: Sequence[Sequence[int]], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), ncols), ZZ)
    _, _, pivots = dm.to_sparse().rref_den(method="FF")
    return len(pivots)


def rank_corank(a: IntMatrix) -> tuple[int, int]:
    """Exact rank over QQ via fraction-free row reduction."""
    rank = _rank_rows(a.rows, a.dim)
    return rank, a.dim - rank


def biadjacency(k: int, j: int) -> tuple[tuple[Shape, ...], tuple[Shape, ...], list[list[int]]]:
    """
    Even-size shapes, odd-size shapes, and the 0/1 matrix joining them. A_{k,j} is this block
    and its transpose, so rank(A_{k,j}) = 2 rank(B).
    """
    full, _ = rect_lattice(k, j)
    even = [i for i, s in enumerate(full.legend) if s.size % 2 == 0]
    odd = [i for i, s in enumerate(full.legend) if s.size % 2]
    block = [[full.rows[a][b] for b in odd] for a in even]
    return (
        tuple(full.legend[i] for i in even),
        tuple(full.legend[i] for i in odd),
        block,
    )


def lattice_rank(k: int, j: int) -> tuple[int, int]:
    """(rank, corank) of A_{k,j} through its bipartite block."""
    even, odd, block = biadjacency(k, j)
    rank = 2 * _rank_rows(block, len(odd))
    return rank, len(even) + len(odd) - rank


# primes below 2**31 keep every product inside int64
_PRIMES = (2147483629, 2147483587, 1000000007)


def nonsingular_mod_p(rows: Sequence[Sequence[int]], p: int) -> bool:
    """Gaussian elimination over GF(p); True proves the integer matrix is nonsingular."""
    m = np.array(rows, dtype=np.int64) % p
    size = m.shape[0]
    for c in range(size):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return False
        r = c + int(nz[0])
        if r != c:
            m[[c, r]] = m[[r, c]]
        inv = pow(int(m[c, c]), -1, p)
        pivot = (m[c] * inv) % p
        m[c + 1 :] = (m[c + 1 :] - np.outer(m[c + 1 :, c], pivot) % p) % p
    return True


def is_invertible(k: int, j: int) -> bool:
    """
    Exact decision for det(A_{k,j}) != 0: unequal bipartite sides force singularity, a nonzero
    determinant modulo any prime proves invertibility, otherwise fall back to the exact rank.
    """
    even, odd, block = biadjacency(k, j)
    if len(even) != len(odd):
        return False
    if not block:
        return True
    if any(nonsingular_mod_p(block, p) for p in _PRIMES):
        return True
    return _rank_rows(block, len(odd)) == len(odd)


@dataclass(frozen=True, slots=True)
class RankReport:
    k: int
    j: int
    dim: int
    rank: int
    corank: int
    twice_degree: int | None = None

    @property
    def consistent(self) -> bool | None:
        if self.twice_degree is None:
            return None
        return self.rank == self.twice_degree

    @property
    def invertible(self) -> bool:
        return self.corank == 0


def rank_report(k: int, j: int, with_degree: bool = True) -> RankReport:
    """
    Rank and 2 deg p_{k,j} computed independently; a mismatch is reported, never raised.
    ``with_degree=False`` skips the characteristic polynomial for large lattices.
    """
    rank, corank = lattice_rank(k, j)
    twice = 2 * p_kj(k, j).degree if with_degree else None
    report = RankReport(k, j, rank + corank, rank, corank, twice)
    if report.consistent is False:
        log.warning(
            "transfer.rank_mismatch",
            extra={"k": k, "j": j, "rank": rank, "twice_degree": report.twice_degree},
        )
    return report


def gkj_count(k: int, j: int, m: int) -> int:
    """Closed walks of length 2m at ∅ in L(k, j): matchings on [2m] with cr <= k, ne <= j."""
    _check_box(k, j)
    if m < 0:
        raise InvalidArgumentError(f"m must be non-negative, got {m}")
    return walk_distribution(WalkKind.OSCILLATING, 2 * m, k, j).get(EMPTY, 0)


def gkj_series(k: int, j: int, order: int) -> ExactSeries:
    """det(I - xA_{k,j}(0)) / det(I - xA_{k,j}) expanded modulo x^order."""
    full, reduced = rect_lattice(k, j)
    num = ExactSeries.from_poly(char_poly(reduced), order)
    den = ExactSeries.from_poly(char_poly(full), order)
    return num / den


def gkj_sequence(k: int, j: int, m: int) -> list[int]:
    """g_{k,j}(0), ..., g_{k,j}(m) read off the even coefficients of the series."""
    s = gkj_series(k, j, 2 * m + 1)
    out = [s.coefficient(2 * i) for i in range(m + 1)]
    if any(c.denominator != 1 for c in out):
        raise ConsistencyError(f"non-integral walk count in the ({k}, {j}) series")
    return [c.numerator for c in out]


@dataclass(frozen=True, slots=True)
class EigenMatch:
    eigenvalue: float
    theta: float
    witness: tuple[int, ...]

    @property
    def distance(self) -> float:
        return abs(self.eigenvalue - self.theta)


@dataclass(frozen=True, slots=True)
class EigenReport:
    k: int
    j: int
    modulus: int
    tolerance: float
    matches: tuple[EigenMatch, ...]

    @property
    def ok(self) -> bool:
        return all(mt.distance <= self.tolerance for mt in self.matches)


def eigenvalue_form_check(k: int, j: int, tolerance: float | None = None) -> EigenReport:
    """
    Match every eigenvalue of A_{k,j} with the nearest 2(cos(πr_1/m) + ... + cos(πr_j/m)),
    m = j + k + 1, 0 <= r_i <= 2m - 1. Only this direction is checked.
    """
    cfg = get_settings()
    tol = cfg.EIGEN_TOLERANCE if tolerance is None else tolerance
    _check_box(k, j)
    dim = math.comb(k + j, j)
    if dim > cfg.EIGEN_MAX_DIM:
        raise BoundExceededError(
            f"L({k},{j}) has {dim} vertices; the eigen bound is {cfg.EIGEN_MAX_DIM}"
        )
    full, _ = rect_lattice(k, j)
    eig = np.linalg.eigvalsh(np.array(full.rows, dtype=float))

    m = j + k + 1
    witnesses = list(combinations_with_replacement(range(2 * m), j))
    cos = np.cos(np.pi * np.arange(2 * m) / m)
    thetas = np.array([2 * cos[list(w)].sum() for w in witnesses])

    matches = []
    for lam in eig:
        best = int(np.argmin(np.abs(thetas - lam)))
        matches.append(EigenMatch(float(lam), float(thetas[best]), witnesses[best]))
    report = EigenReport(k, j, m, tol, tuple(matches))
    log.info("transfer.eigen", extra={"k": k, "j": j, "dim": dim, "ok": report.ok})
    return report


def gaussian_binomial(a: int, b: int) -> tuple[int, ...]:
    """Coefficients of [a+b choose b]_q, constant term first: shapes in an a x b box by size."""
    if a < 0 or b < 0:
        raise InvalidArgumentError(f"need a, b >= 0, got ({a}, {b})")

    @lru_cache(maxsize=None)
    def rec(n: int, r: int) -> tuple[int, ...]:
        if r == 0 or r == n:
            return (1,)
        left = rec(n - 1, r - 1)
        right = (0,) * r + rec(n - 1, r)
        size = max(len(left), len(right))
        return tuple(
            (left[i] if i < len(left) else 0) + (right[i] if i < len(right) else 0)
            for i in range(size)
        )

    return rec(a + b, b)


def gaussian_at_minus_one(a: int, b: int) -> int:
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(gaussian_binomial(a, b)))


def bipartite_balance(k: int, j: int) -> tuple[int, int]:
    """(#shapes of even size, #shapes of odd size) in the k x j box."""
    _check_box(k, j)
    even = odd = 0
    for s in iter_box_shapes(k, j):
        if s.size % 2:
            odd += 1
        else:
            even += 1
    return even, odd
