# src/crossnest/engine/walks.py
"""
Walks on Young's lattice (vacillating, hesitating and oscillating tableaux), the bijections
between them and set partitions / matchings, and exact walk counts.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import pairwise
from typing import Callable, Iterator, Literal, Mapping, Sequence

from ..errors import (
    NotAPermutationError,
    NotClosedError,
    OddLengthError,
    StepViolationError,
)
from ..settings import get_settings
from .setpart import (
    SetPartition,
    arc_maps,
    enhanced_rep,
    from_arcs,
    require_matching,
    standard_rep,
)
from .young import (
    EMPTY,
    EMPTY_TABLEAU,
    Shape,
    StandardTableau,
    add_entry,
    cell_difference,
    conjugate,
    delete_entry,
    down_covers,
    parse_shape,
    reverse_insert,
    row_insert,
    tableau_from_chain,
    up_covers,
)

log = logging.getLogger("crossnest.walks")

Step = Literal["same", "add", "remove"]


class WalkKind(str, Enum):
    VACILLATING = "vacillating"
    HESITATING = "hesitating"
    OSCILLATING = "oscillating"


@dataclass(frozen=True, slots=True)
class TableauWalk:
    kind: WalkKind
    shapes: tuple[Shape, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", WalkKind(self.kind))
        object.__setattr__(self, "shapes", tuple(self.shapes))
        if not self.shapes:
            raise StepViolationError(0, "a walk has at least one shape")

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    @property
    def is_closed(self) -> bool:
        return self.shapes[-1] == EMPTY

    @property
    def max_rows(self) -> int:
        return max(s.rows for s in self.shapes)

    @property
    def max_cols(self) -> int:
        return max(s.cols for s in self.shapes)

    def display(self, empty: str = "0") -> str:
        return ",".join(s.compact(empty=empty) for s in self.shapes)

    def __str__(self) -> str:
        return self.display(empty="∅")


@dataclass(frozen=True, slots=True)
class WalkTrace:
    tableaux: tuple[StandardTableau, ...]
    pair_events: tuple[tuple[int, int], ...] = field(default=())


def parse_walk(text: str, kind: WalkKind | str) -> TableauWalk:
    """Comma-separated shapes: ``0,0,1,11,...``, ``∅`` or ``0`` for the empty shape."""
    return TableauWalk(WalkKind(kind), tuple(parse_shape(s) for s in text.split(",")))


def _step(a: Shape, b: Shape) -> Step | None:
    if a == b:
        return "same"
    if b.size == a.size + 1 and b in up_covers(a):
        return "add"
    if b.size + 1 == a.size and b in down_covers(a):
        return "remove"
    return None


def validate_walk(w: TableauWalk) -> None:
    """Raise StepViolationError at the first index breaking the kind's step rule."""
    if w.shapes[0] != EMPTY:
        raise StepViolationError(0, "a walk starts at the empty shape")
    L = w.length
    if w.kind is WalkKind.VACILLATING:
        for i in range(1, L + 1):
            s = _step(w.shapes[i - 1], w.shapes[i])
            allowed = ("same", "remove") if i % 2 else ("same", "add")
            if s not in allowed:
                parity = "odd" if i % 2 else "even"
                raise StepViolationError(i, f"{parity} steps may only {' or '.join(allowed)}")
        if L % 2:
            raise StepViolationError(L, "vacillating walks have even length")
    elif w.kind is WalkKind.HESITATING:
        for k in range(0, L - 1, 2):
            a, b, c = w.shapes[k], w.shapes[k + 1], w.shapes[k + 2]
            s1 = _step(a, b)
            if s1 is None:
                raise StepViolationError(k + 1, "not a one-square move")
            s2 = _step(b, c)
            expected = {"same": "add", "remove": "same", "add": "remove"}[s1]
            if s2 != expected:
                raise StepViolationError(k + 2, f"a {s1} step must be followed by {expected}")
        if L % 2:
            raise StepViolationError(L, "hesitating walks have even length")
    else:
        for i in range(1, L + 1):
            if _step(w.shapes[i - 1], w.shapes[i]) not in ("add", "remove"):
                raise StepViolationError(i, "oscillating steps add or remove exactly one square")


def require_closed(w: TableauWalk) -> None:
    if not w.is_closed:
        raise NotClosedError(w.length, "the walk does not end at the empty shape")


def _walk_from_tableaux(kind: WalkKind, tabs: Sequence[StandardTableau]) -> TableauWalk:
    return TableauWalk(kind, tuple(t.shape for t in tabs))


def phi(p: SetPartition) -> tuple[TableauWalk, WalkTrace]:
    """Partition -> closed vacillating walk, built right to left from the standard arcs."""
    n = p.n
    forward, backward = arc_maps(standard_rep(p).arcs)
    tabs: list[StandardTableau] = [EMPTY_TABLEAU] * (2 * n + 1)
    events: list[tuple[int, int]] = []
    t = EMPTY_TABLEAU
    for j in range(n, 0, -1):
        if j in forward:
            t = delete_entry(t, j)
        tabs[2 * j - 1] = t
        if j in backward:
            i = backward[j]
            t, _ = row_insert(t, i)
            events.append((i, j))
        tabs[2 * j - 2] = t
    return _walk_from_tableaux(WalkKind.VACILLATING, tabs), WalkTrace(tuple(tabs), tuple(events))


def phi_bar(p: SetPartition) -> tuple[TableauWalk, WalkTrace]:
    """Partition -> closed hesitating walk, from the enhanced representation."""
    n = p.n
    diagram = enhanced_rep(p)
    forward, backward = arc_maps(diagram.arcs)
    loops = set(diagram.loops)
    tabs: list[StandardTableau] = [EMPTY_TABLEAU] * (2 * n + 1)
    events: list[tuple[int, int]] = []
    t = EMPTY_TABLEAU
    for j in range(n, 0, -1):
        if j in loops:
            t, _ = row_insert(t, j)
            tabs[2 * j - 1] = t
            t = delete_entry(t, j)
        elif j in backward:
            i = backward[j]
            events.append((i, j))
            if j in forward:
                t, _ = row_insert(t, i)
                tabs[2 * j - 1] = t
                t = delete_entry(t, j)
            else:
                tabs[2 * j - 1] = t
                t, _ = row_insert(t, i)
        else:
            t = delete_entry(t, j)
            tabs[2 * j - 1] = t
        tabs[2 * j - 2] = t
    return _walk_from_tableaux(WalkKind.HESITATING, tabs), WalkTrace(tuple(tabs), tuple(events))


def trace_psi(w: TableauWalk) -> tuple[SetPartition, StandardTableau, WalkTrace]:
    if w.kind is not WalkKind.VACILLATING:
        raise StepViolationError(0, f"psi decodes vacillating walks, not {w.kind.value}")
    validate_walk(w)
    n = w.length // 2
    t = EMPTY_TABLEAU
    tabs = [t]
    events: list[tuple[int, int]] = []
    for k in range(1, n + 1):
        a, b, c = w.shapes[2 * k - 2], w.shapes[2 * k - 1], w.shapes[2 * k]
        if b != a:
            t, j = reverse_insert(t, cell_difference(a, b))
            events.append((j, k))
        tabs.append(t)
        if c != b:
            t = add_entry(t, cell_difference(c, b), k)
        tabs.append(t)
    return from_arcs(n, events), t, WalkTrace(tuple(tabs), tuple(events))


def psi(w: TableauWalk) -> tuple[SetPartition, StandardTableau]:
    """
    Vacillating walk of any end shape -> (P, T); T is empty exactly for closed walks and its
    content lies in max(P).
    """
    p, t, _ = trace_psi(w)
    return p, t


def psi_bar(w: TableauWalk) -> SetPartition:
    """Closed hesitating walk -> partition; inverse of phi_bar."""
    if w.kind is not WalkKind.HESITATING:
        raise StepViolationError(0, f"psi_bar decodes hesitating walks, not {w.kind.value}")
    validate_walk(w)
    require_closed(w)
    n = w.length // 2
    t = EMPTY_TABLEAU
    arcs: list[tuple[int, int]] = []
    for k in range(1, n + 1):
        a, b, c = w.shapes[2 * k - 2], w.shapes[2 * k - 1], w.shapes[2 * k]
        if a == b:
            t = add_entry(t, cell_difference(c, b), k)
        elif b.size < a.size:
            t, e = reverse_insert(t, cell_difference(a, b))
            arcs.append((e, k))
        else:
            t = add_entry(t, cell_difference(b, a), k)
            t, e = reverse_insert(t, cell_difference(b, c))
            if e != k:
                arcs.append((e, k))
    return from_arcs(n, arcs)


def conjugate_walk(w: TableauWalk) -> TableauWalk:
    return TableauWalk(w.kind, tuple(conjugate(s) for s in w.shapes))


def min_max_from_walk(w: TableauWalk) -> tuple[frozenset[int], frozenset[int]]:
    """
    (min(P), max(P)) read off a vacillating walk: i is a block minimum iff step 2i-1 removes
    nothing, and a block maximum iff step 2i adds nothing.
    """
    n = w.length // 2
    mins = {i for i in range(1, n + 1) if w.shapes[2 * i - 1] == w.shapes[2 * i - 2]}
    maxs = {i for i in range(1, n + 1) if w.shapes[2 * i] == w.shapes[2 * i - 1]}
    return frozenset(mins), frozenset(maxs)


def opener_closer_from_walk(w: TableauWalk) -> tuple[frozenset[int], frozenset[int]]:
    """
    (min \\ max, max \\ min) read off a vacillating or hesitating walk from the step-pair types
    (nothing, add) and (remove, nothing).
    """
    n = w.length // 2
    openers: set[int] = set()
    closers: set[int] = set()
    for i in range(1, n + 1):
        a, b, c = w.shapes[2 * i - 2], w.shapes[2 * i - 1], w.shapes[2 * i]
        if a == b and c != b:
            openers.add(i)
        elif b != a and c == b:
            closers.add(i)
    return frozenset(openers), frozenset(closers)


def matching_to_oscillating(m: SetPartition) -> TableauWalk:
    """phi of a complete matching with every do-nothing step deleted."""
    require_matching(m)
    walk, _ = phi(m)
    shapes = [walk.shapes[0]] + [b for a, b in pairwise(walk.shapes) if a != b]
    return TableauWalk(WalkKind.OSCILLATING, tuple(shapes))


def oscillating_to_matching(w: TableauWalk) -> SetPartition:
    if w.kind is not WalkKind.OSCILLATING:
        raise StepViolationError(0, f"expected an oscillating walk, not {w.kind.value}")
    validate_walk(w)
    require_closed(w)
    shapes = [EMPTY]
    for a, b in pairwise(w.shapes):
        if b.size > a.size:
            shapes += [a, b]
        else:
            shapes += [b, b]
    p, _ = psi(TableauWalk(WalkKind.VACILLATING, tuple(shapes)))
    return p


def permutation_matching(w: Sequence[int]) -> SetPartition:
    """The matching with arcs (w(i), 2m - i + 1) on [2m]."""
    m = len(w)
    if sorted(w) != list(range(1, m + 1)):
        raise NotAPermutationError(f"{list(w)!r} is not a permutation of [{m}]")
    return SetPartition(2 * m, tuple((w[i - 1], 2 * m - i + 1) for i in range(1, m + 1)))


def rsk_via_oscillating(w: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """(A(w), B(w)) from the first and the reversed last m steps of the walk of M_w."""
    m = len(w)
    walk = matching_to_oscillating(permutation_matching(w))
    a = tableau_from_chain(walk.shapes[: m + 1])
    b = tableau_from_chain(tuple(reversed(walk.shapes[m:])))
    return a, b


# ---------- enumeration ----------

Box = tuple[int | None, int | None]


def _unit_images(kind: WalkKind, s: Shape, box: Box) -> list[Shape]:
    """End shapes (with multiplicity) of one step pair (one step for oscillating walks)."""
    rows, cols = box

    def ups(x: Shape) -> list[Shape]:
        return [u for u in up_covers(x) if u.fits(rows, cols)]

    if kind is WalkKind.VACILLATING:
        out: list[Shape] = []
        for d in [s] + down_covers(s):
            out.append(d)
            out.extend(ups(d))
        return out
    if kind is WalkKind.HESITATING:
        out = ups(s) + down_covers(s)
        for u in ups(s):
            out.extend(down_covers(u))
        return out
    return ups(s) + down_covers(s)


def _unit_steps(kind: WalkKind) -> int:
    return 1 if kind is WalkKind.OSCILLATING else 2


def _distribution(kind: WalkKind, units: int, box: Box) -> Mapping[Shape, int]:
    if units == 0:
        return {EMPTY: 1}
    prev = _memo()(kind, units - 1, box)
    acc: dict[Shape, int] = {}
    for s, c in prev.items():
        for e in _unit_images(kind, s, box):
            acc[e] = acc.get(e, 0) + c
    return acc


_Memo = Callable[[WalkKind, int, Box], Mapping[Shape, int]]

# (maxsize, memo); rebuilt whenever WALK_MEMO_SIZE changes
_MEMO: tuple[int, _Memo] | None = None


def _memo() -> _Memo:
    global _MEMO
    size = get_settings().WALK_MEMO_SIZE
    if _MEMO is None or _MEMO[0] != size:
        _MEMO = (size, lru_cache(maxsize=size)(_distribution))
    return _MEMO[1]


def walk_distribution(
    kind: WalkKind | str,
    length: int,
    rows: int | None = None,
    cols: int | None = None,
) -> Mapping[Shape, int]:
    """End-shape counts of all walks of ``kind`` and ``length`` from ∅ inside an optional box."""
    kind = WalkKind(kind)
    if length < 0:
        raise OddLengthError(f"length must be non-negative, got {length}")
    if length % _unit_steps(kind):
        raise OddLengthError(f"{kind.value} walks have even length, got {length}")
    units = length // _unit_steps(kind)
    memo = _memo()
    # warm bottom-up so the recursion stays shallow
    for u in range(units + 1):
        memo(kind, u, (rows, cols))
    return memo(kind, units, (rows, cols))


def count_walks(kind: WalkKind | str, shape: Shape, length: int) -> int:
    """g_λ(n) for vacillating walks, f_λ(n) for hesitating walks, of length 2n ending at λ."""
    return walk_distribution(kind, length).get(shape, 0)


def iter_walks(kind: WalkKind | str, length: int, end: Shape = EMPTY) -> Iterator[TableauWalk]:
    """Every walk of ``kind`` and ``length`` from ∅ to ``end``, choices in cover order."""
    kind = WalkKind(kind)
    if length % _unit_steps(kind):
        raise OddLengthError(f"{kind.value} walks have even length, got {length}")
    total = length // _unit_steps(kind)

    def unit_paths(s: Shape) -> Iterator[tuple[Shape, ...]]:
        if kind is WalkKind.VACILLATING:
            for d in [s] + down_covers(s):
                for u in [d] + up_covers(d):
                    yield (d, u)
        elif kind is WalkKind.HESITATING:
            for u in up_covers(s):
                yield (s, u)
            for d in down_covers(s):
                yield (d, d)
            for u in up_covers(s):
                for d in down_covers(u):
                    yield (u, d)
        else:
            for x in up_covers(s) + down_covers(s):
                yield (x,)

    def rec(shapes: tuple[Shape, ...], done: int) -> Iterator[TableauWalk]:
        cur = shapes[-1]
        if done == total:
            if cur == end:
                yield TableauWalk(kind, shapes)
            return
        left = total - done
        for piece in unit_paths(cur):
            nxt = piece[-1]
            if abs(nxt.size - end.size) <= left - 1:
                yield from rec(shapes + piece, done + 1)

    yield from rec((EMPTY,), 0)
