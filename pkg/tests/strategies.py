"""Hypothesis strategies shared by the test modules."""
from __future__ import annotations

from hypothesis import strategies as st

from crossnest.engine.setpart import SetPartition
from crossnest.engine.young import EMPTY_TABLEAU, Shape, StandardTableau, add_entry, addable_cells


@st.composite
def shapes(draw: st.DrawFn, max_size: int = 8) -> Shape:
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts: list[int] = []
    rest = n
    while rest:
        cap = parts[-1] if parts else rest
        p = draw(st.integers(min_value=1, max_value=min(cap, rest)))
        parts.append(p)
        rest -= p
    return Shape(tuple(parts))


@st.composite
def tableaux(draw: st.DrawFn, max_size: int = 7) -> StandardTableau:
    """A tableau grown cell by cell with distinct, increasing-by-insertion-time labels."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    labels = sorted(draw(st.lists(st.integers(1, 30), min_size=n, max_size=n, unique=True)))
    t = EMPTY_TABLEAU
    for v in labels:
        cell = draw(st.sampled_from(addable_cells(t.shape)))
        t = add_entry(t, cell, v)
    return t


@st.composite
def permutations(draw: st.DrawFn, max_size: int = 7) -> tuple[int, ...]:
    n = draw(st.integers(min_value=0, max_value=max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def set_partitions(draw: st.DrawFn, max_n: int = 8) -> SetPartition:
    """Drawn as a restricted growth string."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    rgs: list[int] = []
    top = -1
    for _ in range(n):
        a = draw(st.integers(min_value=0, max_value=top + 1))
        rgs.append(a)
        top = max(top, a)
    return SetPartition.from_rgs(rgs)


@st.composite
def matchings(draw: st.DrawFn, max_m: int = 5) -> SetPartition:
    m = draw(st.integers(min_value=0, max_value=max_m))
    points = list(draw(st.permutations(range(1, 2 * m + 1))))
    return SetPartition(2 * m, tuple((points[2 * i], points[2 * i + 1]) for i in range(m)))
