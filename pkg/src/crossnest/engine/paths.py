# src/crossnest/engine/paths.py
"""
Dyck and Motzkin paths: the (min, max) profile of a partition, recovery of the noncrossing and
nonnesting partition with a given profile, and the matching <-> Dyck path(s) bijections for
2- and 3-noncrossing matchings.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import AbstractSet, Iterator, Sequence

from ..errors import (
    CardinalityMismatchError,
    CrossingBoundError,
    InvalidProfileError,
    ParityError,
    PathsCrossError,
)
from .setpart import SetPartition, from_arcs, require_matching
from .walks import TableauWalk, WalkKind, matching_to_oscillating, oscillating_to_matching
from .young import Shape


class StepKind(str, Enum):
    UP = "U"
    DOWN = "D"
    FLAT = "F"


_DELTA = {StepKind.UP: 1, StepKind.DOWN: -1, StepKind.FLAT: 0}


@dataclass(frozen=True, slots=True)
class LatticePath:
    steps: tuple[StepKind, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(StepKind(s) for s in self.steps))

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        try:
            return cls(tuple(StepKind(ch) for ch in text.strip().upper()))
        except ValueError as e:
            raise InvalidProfileError(f"path {text!r} may only use U, D and F") from e

    @classmethod
    def from_heights(cls, heights: Sequence[int]) -> "LatticePath":
        steps = []
        for a, b in zip(heights, heights[1:]):
            if b - a == 1:
                steps.append(StepKind.UP)
            elif b - a == -1:
                steps.append(StepKind.DOWN)
            elif a == b:
                steps.append(StepKind.FLAT)
            else:
                raise InvalidProfileError(f"heights jump from {a} to {b}")
        return cls(tuple(steps))

    @property
    def heights(self) -> tuple[int, ...]:
        return (0,) + tuple(accumulate(_DELTA[s] for s in self.steps))

    @property
    def is_motzkin(self) -> bool:
        h = self.heights
        return min(h) >= 0 and h[-1] == 0

    @property
    def is_dyck(self) -> bool:
        return StepKind.FLAT not in self.steps and self.is_motzkin

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)


_PROFILE = {
    (True, True): (StepKind.FLAT, StepKind.FLAT),
    (True, False): (StepKind.FLAT, StepKind.UP),
    (False, True): (StepKind.DOWN, StepKind.FLAT),
    (False, False): (StepKind.DOWN, StepKind.UP),
}


def motzkin_profile(S: AbstractSet[int], T: AbstractSet[int], n: int) -> LatticePath:
    """
    The 2n-step profile path of (S, T). It is Motzkin exactly when some partition of [n] has
    block minima S and block maxima T; otherwise the returned path dips below zero.
    """
    if len(S) != len(T):
        raise CardinalityMismatchError(f"|S|={len(S)} differs from |T|={len(T)}")
    outside = sorted(x for x in set(S) | set(T) if not 1 <= x <= n)
    if outside:
        raise CardinalityMismatchError(f"elements {outside} are outside [1, {n}]")
    steps: list[StepKind] = []
    for i in range(1, n + 1):
        steps.extend(_PROFILE[(i in S, i in T)])
    return LatticePath(tuple(steps))


def profile_is_nonempty(S: AbstractSet[int], T: AbstractSet[int], n: int) -> bool:
    return motzkin_profile(S, T, n).is_motzkin


def profile_sets(path: LatticePath) -> tuple[frozenset[int], frozenset[int], int]:
    """Invert motzkin_profile: (S, T, n) from a path built by the four step-pair rules."""
    if len(path) % 2:
        raise InvalidProfileError("profile paths have even length")
    lookup = {v: k for k, v in _PROFILE.items()}
    S: set[int] = set()
    T: set[int] = set()
    for i in range(1, len(path) // 2 + 1):
        pair = (path.steps[2 * i - 2], path.steps[2 * i - 1])
        if pair not in lookup:
            raise InvalidProfileError(f"step pair {pair[0].value}{pair[1].value} at {i}")
        in_s, in_t = lookup[pair]
        if in_s:
            S.add(i)
        if in_t:
            T.add(i)
    return frozenset(S), frozenset(T), len(path) // 2


def _checked_profile(
    path: LatticePath, S: AbstractSet[int], T: AbstractSet[int]
) -> tuple[int, list[int], list[int], tuple[int, ...]]:
    n = len(path) // 2
    if len(path) % 2 or motzkin_profile(S, T, n) != path:
        raise InvalidProfileError(f"{path} is not the profile of S={sorted(S)}, T={sorted(T)}")
    if not path.is_motzkin:
        raise InvalidProfileError(f"{path} goes below zero; no partition has this profile")
    openers = [i for i in range(1, n + 1) if i not in T]
    closers = [j for j in range(1, n + 1) if j not in S]
    return n, openers, closers, path.heights


def noncrossing_from_motzkin(
    path: LatticePath, S: AbstractSet[int], T: AbstractSet[int]
) -> SetPartition:
    """The noncrossing partition with minima S and maxima T."""
    n, openers, closers, a = _checked_profile(path, S, T)
    arcs = []
    for j in closers:
        level = a[2 * j - 2]
        i = max(i for i in openers if i < j and a[2 * i] == level)
        arcs.append((i, j))
    return from_arcs(n, arcs)


def nonnesting_from_motzkin(
    path: LatticePath, S: AbstractSet[int], T: AbstractSet[int]
) -> SetPartition:
    """The nonnesting partition with minima S and maxima T."""
    n, openers, closers, _ = _checked_profile(path, S, T)
    return from_arcs(n, list(zip(openers, closers)))


# ---------- Dyck correspondences ----------

def _guarded_walk(m: SetPartition, k: int) -> TableauWalk:
    require_matching(m)
    walk = matching_to_oscillating(m)
    if walk.max_rows >= k:
        raise CrossingBoundError(f"the matching has a {walk.max_rows}-crossing (needs < {k})")
    return walk


def dyck_from_matching_k2(m: SetPartition) -> LatticePath:
    walk = _guarded_walk(m, 2)
    return LatticePath.from_heights([s.cols for s in walk.shapes])


def matching_from_dyck_k2(path: LatticePath) -> SetPartition:
    if not path.is_dyck:
        raise InvalidProfileError(f"{path} is not a Dyck path")
    shapes = tuple(Shape((h,)) if h else Shape() for h in path.heights)
    return oscillating_to_matching(TableauWalk(WalkKind.OSCILLATING, shapes))


def dyck_pair_from_matching_k3(m: SetPartition) -> tuple[LatticePath, LatticePath]:
    walk = _guarded_walk(m, 3)
    xs = [s.parts[0] if s.rows > 0 else 0 for s in walk.shapes]
    ys = [s.parts[1] if s.rows > 1 else 0 for s in walk.shapes]
    upper = LatticePath.from_heights([x + y for x, y in zip(xs, ys)])
    lower = LatticePath.from_heights([x - y for x, y in zip(xs, ys)])
    return upper, lower


def matching_from_dyck_pair_k3(upper: LatticePath, lower: LatticePath) -> SetPartition:
    if not (upper.is_dyck and lower.is_dyck):
        raise InvalidProfileError("both paths must be Dyck paths")
    if len(upper) != len(lower):
        raise InvalidProfileError(f"path lengths differ: {len(upper)} and {len(lower)}")
    shapes = []
    for pos, (p, q) in enumerate(zip(upper.heights, lower.heights)):
        if p < q:
            raise PathsCrossError(f"the upper path dips below the lower one at step {pos}")
        if (p + q) % 2:
            raise ParityError(f"heights {p} and {q} at step {pos} have different parity")
        x, y = (p + q) // 2, (p - q) // 2
        shapes.append(Shape(tuple(v for v in (x, y) if v)))
    return oscillating_to_matching(TableauWalk(WalkKind.OSCILLATING, tuple(shapes)))


def dyck_paths(m: int) -> Iterator[LatticePath]:
    """Every Dyck path of length 2m, U before D."""

    def rec(prefix: tuple[StepKind, ...], h: int) -> Iterator[LatticePath]:
        left = 2 * m - len(prefix)
        if left == 0:
            yield LatticePath(prefix)
            return
        if h < left:
            yield from rec(prefix + (StepKind.UP,), h + 1)
        if h > 0:
            yield from rec(prefix + (StepKind.DOWN,), h - 1)

    yield from rec((), 0)


def noncrossing_dyck_pairs(m: int) -> Iterator[tuple[LatticePath, LatticePath]]:
    """Pairs (P, Q) of Dyck paths of length 2m with P never below Q."""
    paths = list(dyck_paths(m))
    for upper in paths:
        hu = upper.heights
        for lower in paths:
            if all(a >= b for a, b in zip(hu, lower.heights)):
                yield upper, lower
