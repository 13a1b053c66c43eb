# src/crossnest/engine/setpart.py
"""Set partitions of [n], their arc representations, matchings and exhaustive generators."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..errors import InvalidPartitionError, NotAMatchingError

Arc = tuple[int, int]


@dataclass(frozen=True, slots=True)
class SetPartition:
    """Blocks of {1..n}; stored canonically (sorted blocks, ordered by minimum)."""

    n: int
    blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidPartitionError(f"ground set size must be a non-negative int: {self.n!r}")
        blocks = tuple(
            sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0)
        )
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise InvalidPartitionError("blocks must be non-empty")
            for x in b:
                if not 1 <= x <= self.n:
                    raise InvalidPartitionError(f"element {x} is outside [1, {self.n}]")
                if x in seen:
                    raise InvalidPartitionError(f"element {x} occurs in two blocks")
                seen.add(x)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise InvalidPartitionError(f"blocks do not cover [{self.n}]; missing {missing}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        return cls(n, tuple(tuple(b) for b in blocks))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        groups: dict[int, list[int]] = {}
        for i, label in enumerate(rgs, start=1):
            groups.setdefault(label, []).append(i)
        return cls(len(rgs), tuple(tuple(g) for g in groups.values()))

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True, slots=True)
class ArcDiagram:
    n: int
    arcs: tuple[Arc, ...] = ()
    enhanced: bool = False

    def __post_init__(self) -> None:
        arcs = tuple(sorted((int(i), int(j)) for i, j in self.arcs))
        lefts: set[int] = set()
        rights: set[int] = set()
        for i, j in arcs:
            if not (1 <= i <= j <= self.n):
                raise InvalidPartitionError(f"arc {(i, j)} is outside [1, {self.n}]")
            if i == j and not self.enhanced:
                raise InvalidPartitionError(f"loop {(i, j)} in a standard diagram")
            if i == j:
                continue
            if i in lefts or j in rights:
                raise InvalidPartitionError(f"vertex reused as an endpoint at arc {(i, j)}")
            lefts.add(i)
            rights.add(j)
        object.__setattr__(self, "arcs", arcs)

    @property
    def proper_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a[0] < a[1])

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(a[0] for a in self.arcs if a[0] == a[1])


def standard_rep(p: SetPartition) -> ArcDiagram:
    arcs = [(b[i], b[i + 1]) for b in p.blocks for i in range(len(b) - 1)]
    return ArcDiagram(p.n, tuple(arcs), enhanced=False)


def enhanced_rep(p: SetPartition) -> ArcDiagram:
    loops = [(x, x) for x in singletons(p)]
    return ArcDiagram(p.n, standard_rep(p).arcs + tuple(loops), enhanced=True)


def arc_maps(arcs: Iterable[Arc]) -> tuple[dict[int, int], dict[int, int]]:
    """(left endpoint -> right endpoint, right endpoint -> left endpoint) for proper arcs."""
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for i, j in arcs:
        if i < j:
            forward[i] = j
            backward[j] = i
    return forward, backward


def from_arcs(n: int, arcs: Iterable[Arc]) -> SetPartition:
    """Rebuild the partition whose standard representation is ``arcs``."""
    diagram = ArcDiagram(n, tuple(arcs), enhanced=False)
    forward, backward = arc_maps(diagram.arcs)
    blocks: list[tuple[int, ...]] = []
    for start in range(1, n + 1):
        if start in backward:
            continue
        block = [start]
        while block[-1] in forward:
            block.append(forward[block[-1]])
        blocks.append(tuple(block))
    p = SetPartition(n, tuple(blocks))
    if standard_rep(p).arcs != diagram.arcs:
        raise InvalidPartitionError("arcs do not join consecutive block elements")
    return p


def min_set(p: SetPartition) -> frozenset[int]:
    return frozenset(b[0] for b in p.blocks)


def max_set(p: SetPartition) -> frozenset[int]:
    return frozenset(b[-1] for b in p.blocks)


def singletons(p: SetPartition) -> tuple[int, ...]:
    return tuple(b[0] for b in p.blocks if len(b) == 1)


def is_complete_matching(p: SetPartition) -> bool:
    return all(len(b) == 2 for b in p.blocks)


def require_matching(p: SetPartition) -> None:
    if not is_complete_matching(p):
        raise NotAMatchingError(f"{format_partition(p)} is not a complete matching")


def _valid_rgs_prefix(prefix: Sequence[int]) -> bool:
    top = -1
    for a in prefix:
        if not 0 <= a <= top + 1:
            return False
        top = max(top, a)
    return True


def partitions_iter(n: int, prefix: Sequence[int] = ()) -> Iterator[SetPartition]:
    """
    Every partition of [n], restricted-growth-string lexicographic order.
    A non-empty ``prefix`` restricts to the strings starting with it (one shard).
    """
    if n < 0:
        raise InvalidPartitionError(f"n must be non-negative, got {n}")
    if len(prefix) > n or not _valid_rgs_prefix(prefix):
        raise InvalidPartitionError(f"{list(prefix)!r} is not a restricted-growth prefix for n={n}")
    rgs = list(prefix) + [0] * (n - len(prefix))

    def rec(i: int, top: int) -> Iterator[SetPartition]:
        if i == n:
            yield SetPartition.from_rgs(rgs)
            return
        for a in range(top + 2):
            rgs[i] = a
            yield from rec(i + 1, max(top, a))

    yield from rec(len(prefix), max(prefix, default=-1))


def rgs_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All restricted-growth prefixes of length ``min(depth, n)``, in lexicographic order."""
    depth = min(depth, n)
    out: list[tuple[int, ...]] = []

    def rec(cur: tuple[int, ...], top: int) -> None:
        if len(cur) == depth:
            out.append(cur)
            return
        for a in range(top + 2):
            rec(cur + (a,), max(top, a))

    rec((), -1)
    return out


def matchings_iter(m: int, first_partner: int | None = None) -> Iterator[SetPartition]:
    """
    Every complete matching on [2m] in lexicographic order of partners; ``first_partner``
    pins the partner of 1 (one shard).
    """
    if m < 0:
        raise NotAMatchingError(f"m must be non-negative, got {m}")
    n = 2 * m

    def rec(free: tuple[int, ...], acc: tuple[tuple[int, int], ...]) -> Iterator[SetPartition]:
        if not free:
            yield SetPartition(n, acc)
            return
        head, rest = free[0], free[1:]
        for idx, partner in enumerate(rest):
            if not acc and first_partner is not None and partner != first_partner:
                continue
            yield from rec(rest[:idx] + rest[idx + 1 :], acc + ((head, partner),))

    yield from rec(tuple(range(1, n + 1)), ())


_BRACKET = re.compile(r"\[([^\]]*)\]")


def parse_partition(text: str) -> SetPartition:
    """
    Dash notation: ``1457-26-3`` (digits, n <= 9) or ``[1,10]-[2]-...`` (bracketed blocks).
    The empty string is the partition of [0].
    """
    t = text.strip()
    if not t or t == "∅":
        return SetPartition(0, ())
    blocks: list[tuple[int, ...]] = []
    try:
        if "[" in t:
            pieces = t.split("-")
            for piece in pieces:
                mt = _BRACKET.fullmatch(piece.strip())
                if mt is None:
                    raise InvalidPartitionError(f"malformed bracketed block {piece!r}")
                blocks.append(tuple(int(x) for x in mt.group(1).split(",") if x.strip()))
        else:
            for piece in t.split("-"):
                if not piece.isdigit():
                    raise InvalidPartitionError(f"malformed block {piece!r} in {text!r}")
                blocks.append(tuple(int(ch) for ch in piece))
    except ValueError as e:
        if isinstance(e, InvalidPartitionError):
            raise
        raise InvalidPartitionError(f"cannot parse partition {text!r}") from e
    n = sum(len(b) for b in blocks)
    for b in blocks:
        if len(set(b)) != len(b):
            raise InvalidPartitionError(f"block {list(b)} repeats an element")
    return SetPartition(n, tuple(blocks))


def format_partition(p: SetPartition) -> str:
    if p.n <= 9:
        return "-".join("".join(str(x) for x in b) for b in p.blocks)
    return "-".join("[" + ",".join(str(x) for x in b) + "]" for b in p.blocks)
