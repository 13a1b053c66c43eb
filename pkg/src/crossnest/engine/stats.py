# src/crossnest/engine/stats.py
"""
Crossing and nesting statistics of set partitions.

The fast path reads cr/ne off the shapes of the phi walk (row and column maxima) and the
enhanced variants off the phi_bar walk. The ``oracle_*`` functions search cliques of the arc
relations directly and exist for verification only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Sequence, TypeVar

from ..errors import InvalidArgumentError, SizeLimitError
from ..settings import get_settings
from .setpart import Arc, SetPartition, enhanced_rep, standard_rep
from .walks import phi, phi_bar
from .young import conjugate, lds_length, rsk

log = logging.getLogger("crossnest.stats")

T = TypeVar("T")
Relation = Callable[[T, T], bool]


@dataclass(frozen=True, slots=True)
class StatRecord:
    cr: int
    ne: int
    enhanced_cr: int
    enhanced_ne: int


def cr(p: SetPartition) -> int:
    walk, _ = phi(p)
    return walk.max_rows


def ne(p: SetPartition) -> int:
    walk, _ = phi(p)
    return walk.max_cols


def enhanced_cr(p: SetPartition) -> int:
    walk, _ = phi_bar(p)
    return walk.max_rows


def enhanced_ne(p: SetPartition) -> int:
    walk, _ = phi_bar(p)
    return walk.max_cols


def cr_ne(p: SetPartition) -> tuple[int, int]:
    walk, _ = phi(p)
    return walk.max_rows, walk.max_cols


def enhanced_cr_ne(p: SetPartition) -> tuple[int, int]:
    walk, _ = phi_bar(p)
    return walk.max_rows, walk.max_cols


def stat_record(p: SetPartition) -> StatRecord:
    c, n = cr_ne(p)
    ec, en = enhanced_cr_ne(p)
    return StatRecord(cr=c, ne=n, enhanced_cr=ec, enhanced_ne=en)


# ---------- arc relations ----------

def crosses(e: Arc, f: Arc) -> bool:
    (i1, j1), (i2, j2) = sorted((e, f))
    return i1 < i2 < j1 < j2


def nests(e: Arc, f: Arc) -> bool:
    (i1, j1), (i2, j2) = sorted((e, f))
    return i1 < i2 and j2 < j1


def enhanced_crosses(e: Arc, f: Arc) -> bool:
    (i1, j1), (i2, j2) = sorted((e, f))
    return i1 < i2 <= j1 < j2


def enhanced_nests(e: Arc, f: Arc) -> bool:
    (i1, j1), (i2, j2) = sorted((e, f))
    return i1 < i2 <= j2 < j1


def _adjacency(items: Sequence[T], related: Relation[T]) -> list[int]:
    adj = [0] * len(items)
    for a, b in combinations(range(len(items)), 2):
        if related(items[a], items[b]):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def max_clique(items: Sequence[T], related: Relation[T]) -> int:
    """Size of the largest pairwise-related subset (0 for no items)."""
    adj = _adjacency(items, related)
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if candidates == 0:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            expand(size + 1, candidates & adj[v])

    expand(0, (1 << len(items)) - 1)
    return best


def maximal_cliques(items: Sequence[T], related: Relation[T]) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting; cliques as index sets."""
    adj = _adjacency(items, related)
    out: list[frozenset[int]] = []

    def bits(x: int) -> list[int]:
        return [i for i in range(len(items)) if x >> i & 1]

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(frozenset(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if items:
        bk(0, (1 << len(items)) - 1, 0)
    return out


def _guard_arcs(arcs: Sequence[Arc]) -> None:
    limit = get_settings().ORACLE_MAX_ARCS
    if len(arcs) > limit:
        raise SizeLimitError(f"{len(arcs)} arcs exceed the oracle bound of {limit}")


def oracle_cr(p: SetPartition) -> int:
    arcs = standard_rep(p).arcs
    _guard_arcs(arcs)
    return max_clique(arcs, crosses)


def oracle_ne(p: SetPartition) -> int:
    arcs = standard_rep(p).arcs
    _guard_arcs(arcs)
    return max_clique(arcs, nests)


def oracle_enhanced_cr(p: SetPartition) -> int:
    arcs = enhanced_rep(p).arcs
    _guard_arcs(arcs)
    return max_clique(arcs, enhanced_crosses)


def oracle_enhanced_ne(p: SetPartition) -> int:
    arcs = enhanced_rep(p).arcs
    _guard_arcs(arcs)
    return max_clique(arcs, enhanced_nests)


# ---------- r-fold statistics ----------

def alpha_sequence(p: SetPartition) -> tuple[int, ...]:
    """Left endpoints of the standard arcs listed by increasing right endpoint."""
    return tuple(i for i, _ in sorted(standard_rep(p).arcs, key=lambda a: a[1]))


def longest_decreasing(seq: Sequence[int]) -> int:
    return lds_length(seq)


def ne_r(p: SetPartition, r: int) -> int:
    """Most arcs in a union of r nestings: the first r columns of the RSK shape of alpha."""
    if r < 1:
        raise InvalidArgumentError(f"r must be at least 1, got {r}")
    insertion, _ = rsk(alpha_sequence(p))
    return sum(conjugate(insertion.shape).parts[:r])


def _union_of_r(items: Sequence[Arc], related: Relation[Arc], r: int) -> int:
    if r < 1:
        raise InvalidArgumentError(f"r must be at least 1, got {r}")
    cliques = maximal_cliques(items, related)
    if not cliques:
        return 0
    combos = combinations_with_replacement(cliques, r)
    return max(len(frozenset[int]().union(*combo)) for combo in combos)


def oracle_ne_r(p: SetPartition, r: int) -> int:
    arcs = standard_rep(p).arcs
    _guard_arcs(arcs)
    return _union_of_r(arcs, nests, r)


def oracle_cr_r(p: SetPartition, r: int) -> int:
    arcs = standard_rep(p).arcs
    _guard_arcs(arcs)
    return _union_of_r(arcs, crosses, r)


# ---------- block-level notions ----------

def _interleave(first: Sequence[int], second: Sequence[int]) -> bool:
    """True when a < b < c < d exist with a, c in ``first`` and b, d in ``second``."""
    marks = sorted([(x, 0) for x in first] + [(x, 1) for x in second])
    want = 0
    for _, label in marks:
        if label == want % 2:
            want += 1
            if want == 4:
                return True
    return False


def blocks_cross(b: Sequence[int], c: Sequence[int]) -> bool:
    return _interleave(b, c) or _interleave(c, b)


def _guard_blocks(p: SetPartition) -> None:
    limit = get_settings().ORACLE_MAX_BLOCKS
    if len(p.blocks) > limit:
        raise SizeLimitError(f"{len(p.blocks)} blocks exceed the oracle bound of {limit}")


def klazar_crossing_number(p: SetPartition) -> int:
    """Largest set of pairwise crossing blocks; 1 whenever there is at least one block."""
    _guard_blocks(p)
    if not p.blocks:
        return 0
    return max(1, max_clique(p.blocks, blocks_cross))


def block_arc_crossing_number(p: SetPartition) -> int:
    """Largest set of pairwise crossing arcs (any two elements of a block) from distinct blocks."""
    _guard_blocks(p)
    labelled = [(a, c, k) for k, b in enumerate(p.blocks) for a, c in combinations(b, 2)]

    def related(e: tuple[int, int, int], f: tuple[int, int, int]) -> bool:
        return e[2] != f[2] and crosses((e[0], e[1]), (f[0], f[1]))

    return max_clique(labelled, related)


def is_noncrossing_partition(p: SetPartition) -> bool:
    return not any(blocks_cross(b, c) for b, c in combinations(p.blocks, 2))


def is_nonnesting_partition(p: SetPartition) -> bool:
    """No a < b < d < e with a, e in B and b, d in B' unless B has an element between b and d."""
    for outer, inner in permutations(p.blocks, 2):
        for a, e in combinations(outer, 2):
            for b, d in combinations(inner, 2):
                if a < b < d < e and not any(b < x < d for x in outer):
                    return False
    return True
