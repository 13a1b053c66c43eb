# src/crossnest/counting/tables.py
"""
Joint (cr, ne) distribution tables by exhaustive enumeration, optionally filtered by the block
minima/maxima, plus the walk-based counts of partitions with bounded crossings and nestings.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import AbstractSet, Iterable, Iterator, Mapping

from ..engine.setpart import (
    SetPartition,
    matchings_iter,
    max_set,
    min_set,
    partitions_iter,
    rgs_prefixes,
)
from ..engine.stats import cr_ne, enhanced_cr_ne
from ..engine.walks import WalkKind, walk_distribution
from ..engine.young import EMPTY
from ..errors import (
    BoundExceededError,
    ConsistencyError,
    InvalidArgumentError,
    OddLengthError,
    SymmetryViolationError,
)
from ..settings import get_settings
from .numbers import bell, double_factorial

log = logging.getLogger("crossnest.tables")

Cell = tuple[int, int]
Profile = tuple[frozenset[int], frozenset[int]]


class ObjectKind(str, Enum):
    PARTITIONS = "partitions"
    MATCHINGS = "matchings"


@dataclass(frozen=True, slots=True)
class TableFilter:
    """
    Keep partitions with min(P) = S and max(P) = T, or with bar=True, those with
    min(P)\\max(P) = S and max(P)\\min(P) = T (counted by the enhanced statistics).
    """

    S: frozenset[int]
    T: frozenset[int]
    bar: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))

    def accepts(self, p: SetPartition) -> bool:
        return profile_of(p, self.bar) == (self.S, self.T)


@dataclass(frozen=True, slots=True)
class DistributionTable:
    object_kind: ObjectKind
    n: int
    filter: TableFilter | None = None
    enhanced: bool = False
    cells: Mapping[Cell, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def count(self, i: int, j: int) -> int:
        return self.cells.get((i, j), 0)

    def is_symmetric(self) -> bool:
        return all(self.cells.get((j, i), 0) == c for (i, j), c in self.cells.items())

    def sorted_cells(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self.cells.items()) if c]

    def to_csv(self) -> str:
        lines = ["cr,ne,count"]
        lines.extend(f"{i},{j},{c}" for i, j, c in self.sorted_cells())
        return "\n".join(lines) + "\n"


def profile_of(p: SetPartition, bar: bool = False) -> Profile:
    lo, hi = min_set(p), max_set(p)
    return (lo - hi, hi - lo) if bar else (lo, hi)


def _bound(kind: ObjectKind) -> int:
    s = get_settings()
    return s.PARTITION_BOUND if kind is ObjectKind.PARTITIONS else s.MATCHING_BOUND


def _check_size(kind: ObjectKind, n: int, shards: int) -> None:
    if n < 0:
        raise InvalidArgumentError(f"n must be non-negative, got {n}")
    if kind is ObjectKind.MATCHINGS and n % 2:
        raise OddLengthError(f"matchings need an even ground set, got n={n}")
    bound = _bound(kind)
    if n > bound and shards <= 1:
        raise BoundExceededError(
            f"n={n} exceeds the {kind.value} bound of {bound}; rerun with --shards N to lift it"
        )


def _objects(kind: ObjectKind, n: int, shard: object) -> Iterator[SetPartition]:
    if kind is ObjectKind.PARTITIONS:
        yield from partitions_iter(n, shard if isinstance(shard, tuple) else ())
    else:
        yield from matchings_iter(n // 2, shard if isinstance(shard, int) else None)


def _tally(
    kind: ObjectKind,
    n: int,
    shard: object,
    flt: TableFilter | None,
    enhanced: bool,
) -> dict[Cell, int]:
    """One shard's partial table; module-level so worker processes can pickle it."""
    stat = enhanced_cr_ne if enhanced else cr_ne
    acc: Counter[Cell] = Counter()
    for p in _objects(kind, n, shard):
        if flt is None or flt.accepts(p):
            acc[stat(p)] += 1
    return dict(acc)


def _shards(kind: ObjectKind, n: int, shards: int) -> list[object]:
    if shards <= 1 or n < 2:
        return [None]
    if kind is ObjectKind.MATCHINGS:
        return list(range(2, n + 1))
    depth = 1
    prefixes = rgs_prefixes(n, depth)
    while len(prefixes) < shards and depth < n:
        depth += 1
        prefixes = rgs_prefixes(n, depth)
    return list(prefixes)


def _expected_total(kind: ObjectKind, n: int) -> int:
    return bell(n) if kind is ObjectKind.PARTITIONS else double_factorial(n - 1)


def distribution(
    object_kind: ObjectKind | str,
    n: int,
    filter: TableFilter | None = None,
    *,
    enhanced: bool | None = None,
    shards: int = 1,
) -> DistributionTable:
    """
    Exact (cr, ne) table over every partition (or complete matching) of [n]. ``enhanced``
    defaults to the filter's bar flag. The result is checked for symmetry before returning.
    """
    kind = ObjectKind(object_kind)
    _check_size(kind, n, shards)
    use_enhanced = filter.bar if enhanced is None and filter is not None else bool(enhanced)
    jobs = _shards(kind, n, shards)
    started = time.perf_counter()

    merged: Counter[Cell] = Counter()
    if len(jobs) == 1:
        merged.update(_tally(kind, n, jobs[0], filter, use_enhanced))
    else:
        workers = min(shards, get_settings().WORKERS, len(jobs))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_tally, kind, n, job, filter, use_enhanced) for job in jobs]
            # merge in shard order so the result never depends on scheduling
            for fut in futures:
                merged.update(fut.result())

    table = DistributionTable(kind, n, filter, use_enhanced, dict(merged))
    if filter is None and table.total != _expected_total(kind, n):
        raise ConsistencyError(
            f"{kind.value} table for n={n} sums to {table.total}, "
            f"expected {_expected_total(kind, n)}"
        )
    if not table.is_symmetric():
        raise SymmetryViolationError(f"{kind.value} table for n={n} is not symmetric")
    log.info(
        "table.done",
        extra={
            "object": kind.value,
            "n": n,
            "shards": len(jobs),
            "enhanced": use_enhanced,
            "total": table.total,
            "elapsed_ms": round((time.perf_counter() - started) * 1000, 1),
        },
    )
    return table


def distribution_by_profile(
    object_kind: ObjectKind | str, n: int, bar: bool = False
) -> dict[Profile, DistributionTable]:
    """Every non-empty (S, T)-filtered table in a single sweep."""
    kind = ObjectKind(object_kind)
    _check_size(kind, n, 1)
    stat = enhanced_cr_ne if bar else cr_ne
    groups: dict[Profile, Counter[Cell]] = {}
    for p in _objects(kind, n, None):
        groups.setdefault(profile_of(p, bar), Counter())[stat(p)] += 1
    order = sorted(groups, key=lambda st: (sorted(st[0]), sorted(st[1])))
    return {
        key: DistributionTable(kind, n, TableFilter(key[0], key[1], bar), bar, dict(groups[key]))
        for key in order
    }


def merge_tables(tables: Iterable[DistributionTable]) -> DistributionTable:
    """Cellwise sum of partial tables that share kind, n, filter and statistic."""
    tables = list(tables)
    if not tables:
        raise ConsistencyError("nothing to merge")
    head = tables[0]
    merged: Counter[Cell] = Counter()
    for t in tables:
        if (t.object_kind, t.n, t.filter, t.enhanced) != (
            head.object_kind,
            head.n,
            head.filter,
            head.enhanced,
        ):
            raise ConsistencyError("tables disagree on object kind, n, filter or statistic")
        merged.update(t.cells)
    return DistributionTable(head.object_kind, head.n, head.filter, head.enhanced, dict(merged))


def ncn(k: int | None, l: int | None, n: int) -> int:
    """Partitions of [n] with cr < k and ne < l; ``None`` leaves that side unbounded."""
    for name, v in (("k", k), ("l", l)):
        if v is not None and v < 1:
            raise InvalidArgumentError(f"{name} must be at least 1 or unbounded, got {v}")
    rows = None if k is None else k - 1
    cols = None if l is None else l - 1
    return walk_distribution(WalkKind.VACILLATING, 2 * n, rows, cols).get(EMPTY, 0)


def nc_count(k: int, n: int) -> int:
    return ncn(k, None, n)


def nn_count(k: int, n: int) -> int:
    return ncn(None, k, n)


def g_lambda_product_sum(n: int, m: int) -> int:
    """Sum over shapes of g_λ(n) g_λ(m); equals Bell(n + m)."""
    a = walk_distribution(WalkKind.VACILLATING, 2 * n)
    b = walk_distribution(WalkKind.VACILLATING, 2 * m)
    return sum(c * b.get(s, 0) for s, c in a.items())


def brute_force_profile_size(n: int, S: AbstractSet[int], T: AbstractSet[int]) -> int:
    """|P_n(S, T)| by enumeration."""
    want = (frozenset(S), frozenset(T))
    return sum(1 for p in partitions_iter(n) if profile_of(p) == want)
