# src/crossnest/engine/young.py
"""
Shapes (integer partitions), moves in Young's lattice, standard Young tableaux with arbitrary
distinct content, hook lengths and RSK row insertion.

Cells are ``(row, col)`` pairs, 1-based, row 1 on top.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from ..errors import (
    DuplicateEntryError,
    InvalidCornerError,
    InvalidShapeError,
    InvalidTableauError,
)

Cell = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Shape:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise InvalidShapeError(f"parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidShapeError(f"parts must be weakly decreasing, got {parts!r}")

    @classmethod
    def of(cls, *parts: int) -> "Shape":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def fits(self, rows: int | None, cols: int | None) -> bool:
        """True when the diagram fits a ``rows`` x ``cols`` box (``None`` = unbounded)."""
        return (rows is None or self.rows <= rows) and (cols is None or self.cols <= cols)

    def compact(self, empty: str = "∅") -> str:
        if not self.parts:
            return empty
        if all(p <= 9 for p in self.parts):
            return "".join(str(p) for p in self.parts)
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __str__(self) -> str:
        return self.compact()


EMPTY = Shape()


def parse_shape(text: str) -> Shape:
    """Accepts ``21``, ``[2,1]``, ``2,1``, ``∅``, ``0`` or the empty string."""
    t = text.strip()
    if t in ("", "∅", "0", "[]"):
        return EMPTY
    if t.startswith("["):
        if not t.endswith("]"):
            raise InvalidShapeError(f"unbalanced brackets in shape {text!r}")
        t = t[1:-1]
    try:
        if "," in t:
            parts = tuple(int(x) for x in t.split(",") if x.strip())
        else:
            parts = tuple(int(ch) for ch in t)
    except ValueError as e:
        raise InvalidShapeError(f"cannot parse shape {text!r}") from e
    return Shape(parts)


def conjugate(s: Shape) -> Shape:
    if not s.parts:
        return EMPTY
    return Shape(tuple(sum(1 for p in s.parts if p >= i) for i in range(1, s.parts[0] + 1)))


def addable_cells(s: Shape) -> list[Cell]:
    """Addable cells in row order."""
    out: list[Cell] = []
    prev = None
    for r, p in enumerate(s.parts, start=1):
        if prev is None or p < prev:
            out.append((r, p + 1))
        prev = p
    out.append((s.rows + 1, 1))
    return out


def removable_cells(s: Shape) -> list[Cell]:
    """Corners in row order."""
    parts = s.parts
    return [
        (r, p)
        for r, p in enumerate(parts, start=1)
        if r == len(parts) or parts[r] < p
    ]


def add_cell(s: Shape, row: int) -> Shape:
    parts = list(s.parts)
    if row == len(parts) + 1:
        parts.append(1)
    elif 1 <= row <= len(parts):
        parts[row - 1] += 1
    else:
        raise InvalidCornerError(f"row {row} is out of range for shape {s}")
    return Shape(tuple(parts))


def remove_cell(s: Shape, row: int) -> Shape:
    if not 1 <= row <= s.rows:
        raise InvalidCornerError(f"row {row} is out of range for shape {s}")
    parts = list(s.parts)
    parts[row - 1] -= 1
    return Shape(tuple(p for p in parts if p))


def up_covers(s: Shape) -> list[Shape]:
    """Shapes one square above ``s``, decreasing lexicographic on parts."""
    return sorted(
        (add_cell(s, r) for r, _ in addable_cells(s)), key=lambda x: x.parts, reverse=True
    )


def down_covers(s: Shape) -> list[Shape]:
    """Shapes one square below ``s``, decreasing lexicographic on parts."""
    return sorted(
        (remove_cell(s, r) for r, _ in removable_cells(s)), key=lambda x: x.parts, reverse=True
    )


def cell_difference(bigger: Shape, smaller: Shape) -> Cell:
    """The single cell of ``bigger`` not in ``smaller``; they must differ by one square."""
    if bigger.size != smaller.size + 1 or bigger.rows > smaller.rows + 1:
        raise InvalidShapeError(f"{bigger} does not cover {smaller}")
    padded = smaller.parts + (0,) * (bigger.rows - smaller.rows)
    diffs = [(r, b) for r, (b, a) in enumerate(zip(bigger.parts, padded), start=1) if b != a]
    if len(diffs) != 1 or bigger.parts[diffs[0][0] - 1] != padded[diffs[0][0] - 1] + 1:
        raise InvalidShapeError(f"{bigger} does not cover {smaller}")
    return diffs[0]


def up_down_commutator(s: Shape) -> Counter[Shape]:
    """Coefficients of (DU - UD) applied to ``s`` in Young's lattice; zero terms dropped."""
    acc: Counter[Shape] = Counter()
    for u in up_covers(s):
        acc.update(down_covers(u))
    for d in down_covers(s):
        acc.subtract(up_covers(d))
    return Counter({k: v for k, v in acc.items() if v})


def iter_shapes(size: int) -> Iterator[Shape]:
    """All shapes of ``size``, decreasing lexicographic order."""

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(size, size):
        yield Shape(parts)


def iter_box_shapes(rows: int, cols: int) -> Iterator[Shape]:
    """Every shape fitting a ``rows`` x ``cols`` box."""

    def rec(k: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if k == 0:
            return
        for p in range(1, cap + 1):
            for tail in rec(k - 1, p):
                yield (p,) + tail

    for parts in rec(rows, cols):
        yield Shape(parts)


def syt_count(s: Shape) -> int:
    """f^λ by the hook-length formula."""
    conj = conjugate(s)
    hooks = 1
    for r, p in enumerate(s.parts, start=1):
        for c in range(1, p + 1):
            hooks *= (p - c) + (conj.parts[c - 1] - r) + 1
    return math.factorial(s.size) // hooks


@dataclass(frozen=True, slots=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        seen: set[int] = set()
        for i, row in enumerate(rows):
            if not row:
                raise InvalidTableauError("tableau rows must be non-empty")
            if i and len(row) > len(rows[i - 1]):
                raise InvalidTableauError(f"row lengths must weakly decrease: {rows!r}")
            for c, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    raise InvalidTableauError(f"entries must be positive integers: {rows!r}")
                if v in seen:
                    raise InvalidTableauError(f"entry {v} occurs twice")
                seen.add(v)
                if c and row[c - 1] >= v:
                    raise InvalidTableauError(f"row {i + 1} is not increasing: {row!r}")
                if i and rows[i - 1][c] >= v:
                    raise InvalidTableauError(f"column {c + 1} is not increasing at row {i + 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "StandardTableau":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows))

    @property
    def content(self) -> frozenset[int]:
        return frozenset(v for r in self.rows for v in r)

    def entry(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def __str__(self) -> str:
        if not self.rows:
            return "∅"
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)


EMPTY_TABLEAU = StandardTableau()


def row_insert(t: StandardTableau, v: int) -> tuple[StandardTableau, tuple[Cell, ...]]:
    """RSK row insertion of ``v``; the path ends at the newly created cell."""
    if v in t.content:
        raise DuplicateEntryError(f"{v} is already in the tableau")
    rows = [list(r) for r in t.rows]
    path: list[Cell] = []
    x = v
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            path.append((r + 1, 1))
            break
        row = rows[r]
        pos = bisect_right(row, x)
        path.append((r + 1, pos + 1))
        if pos == len(row):
            row.append(x)
            break
        x, row[pos] = row[pos], x
        r += 1
    return StandardTableau.from_rows(rows), tuple(path)


def reverse_insert(t: StandardTableau, corner: Cell) -> tuple[StandardTableau, int]:
    """Undo a row insertion that ended at ``corner``; returns the ejected value."""
    if corner not in removable_cells(t.shape):
        raise InvalidCornerError(f"{corner} is not a removable corner of {t.shape}")
    r, _ = corner
    rows = [list(row) for row in t.rows]
    x = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop(r - 1)
    for i in range(r - 2, -1, -1):
        row = rows[i]
        pos = bisect_left(row, x) - 1
        x, row[pos] = row[pos], x
    return StandardTableau.from_rows(rows), x


def add_entry(t: StandardTableau, cell: Cell, v: int) -> StandardTableau:
    """Place ``v`` in the addable ``cell``."""
    if cell not in addable_cells(t.shape):
        raise InvalidCornerError(f"{cell} is not an addable cell of {t.shape}")
    if v in t.content:
        raise DuplicateEntryError(f"{v} is already in the tableau")
    rows = [list(row) for row in t.rows]
    r, _ = cell
    if r > len(rows):
        rows.append([v])
    else:
        rows[r - 1].append(v)
    return StandardTableau.from_rows(rows)


def delete_entry(t: StandardTableau, v: int) -> StandardTableau:
    """Remove ``v``, which must sit in a corner cell."""
    for cell in removable_cells(t.shape):
        if t.entry(cell) == v:
            rows = [list(row) for row in t.rows]
            rows[cell[0] - 1].pop()
            return StandardTableau.from_rows(r for r in rows if r)
    raise InvalidCornerError(f"{v} is not in a corner of the tableau")


def tableau_from_chain(shapes: Sequence[Shape]) -> StandardTableau:
    """SYT recording a saturated chain ∅ = μ0 ⊂ μ1 ⊂ ... (entry i in μi / μi-1)."""
    if not shapes or shapes[0] != EMPTY:
        raise InvalidTableauError("a growth chain must start at the empty shape")
    t = EMPTY_TABLEAU
    for i in range(1, len(shapes)):
        try:
            cell = cell_difference(shapes[i], shapes[i - 1])
        except InvalidShapeError as e:
            raise InvalidTableauError(f"not a saturated chain at position {i}") from e
        t = add_entry(t, cell, i)
    return t


def iter_syt(s: Shape) -> Iterator[StandardTableau]:
    """Every SYT of shape ``s`` with content [|s|]."""
    if s.size == 0:
        yield EMPTY_TABLEAU
        return
    n = s.size
    for r, _ in removable_cells(s):
        for t in iter_syt(remove_cell(s, r)):
            yield add_entry(t, (r, s.parts[r - 1]), n)


def _check_distinct(w: Sequence[int]) -> None:
    if len(set(w)) != len(w):
        raise DuplicateEntryError(f"word has repeated letters: {list(w)!r}")


def rsk(w: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Insertion and recording tableaux of a word with distinct letters."""
    _check_distinct(w)
    a = EMPTY_TABLEAU
    b = EMPTY_TABLEAU
    for idx, v in enumerate(w, start=1):
        a, path = row_insert(a, v)
        b = add_entry(b, path[-1], idx)
    return a, b


def lis_length(w: Sequence[int]) -> int:
    best = [1] * len(w)
    for i in range(len(w)):
        for j in range(i):
            if w[j] < w[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def lds_length(w: Sequence[int]) -> int:
    return lis_length([-x for x in w])


def greene_increasing(w: Sequence[int], k: int) -> int:
    """Largest union of ``k`` increasing subsequences, by subset search."""
    return _greene(w, k, lds_length)


def greene_decreasing(w: Sequence[int], k: int) -> int:
    """Largest union of ``k`` decreasing subsequences, by subset search."""
    return _greene(w, k, lis_length)


def _greene(w: Sequence[int], k: int, antichain: Callable[[Sequence[int]], int]) -> int:
    # a subset splits into k chains iff its longest antichain has length <= k
    for size in range(len(w), -1, -1):
        for idx in combinations(range(len(w)), size):
            if antichain([w[i] for i in idx]) <= k:
                return size
    return 0
