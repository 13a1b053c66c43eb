from __future__ import annotations

from collections import Counter
from math import factorial

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from strategies import permutations, shapes, tableaux

from crossnest.engine.young import (
    EMPTY,
    EMPTY_TABLEAU,
    Shape,
    StandardTableau,
    addable_cells,
    conjugate,
    delete_entry,
    down_covers,
    greene_decreasing,
    greene_increasing,
    iter_shapes,
    iter_syt,
    lds_length,
    lis_length,
    parse_shape,
    removable_cells,
    reverse_insert,
    row_insert,
    rsk,
    syt_count,
    tableau_from_chain,
    up_covers,
    up_down_commutator,
)
from crossnest.errors import (
    DuplicateEntryError,
    InvalidCornerError,
    InvalidShapeError,
    InvalidTableauError,
)


def test_shape_rejects_increasing_parts():
    with pytest.raises(InvalidShapeError):
        Shape((1, 2))
    with pytest.raises(InvalidShapeError):
        Shape((2, 0))


@pytest.mark.parametrize(
    "text, parts",
    [("", ()), ("∅", ()), ("0", ()), ("21", (2, 1)), ("[3,1]", (3, 1)), ("10,2", (10, 2))],
)
def test_parse_shape(text, parts):
    assert parse_shape(text) == Shape(parts)


def test_compact_rendering():
    assert str(EMPTY) == "∅"
    assert Shape.of(2, 1, 1).compact() == "211"
    assert Shape.of(10, 1).compact() == "[10,1]"


def test_covers_are_ordered_by_row():
    assert up_covers(Shape.of(2, 1)) == [Shape.of(3, 1), Shape.of(2, 2), Shape.of(2, 1, 1)]
    assert down_covers(Shape.of(2, 1)) == [Shape.of(2), Shape.of(1, 1)]
    assert down_covers(EMPTY) == []


def test_addable_and_removable_cells():
    s = Shape.of(3, 1, 1)
    assert addable_cells(s) == [(1, 4), (2, 2), (4, 1)]
    assert removable_cells(s) == [(1, 3), (3, 1)]


@given(shapes())
def test_conjugate_is_an_involution(s):
    assert conjugate(conjugate(s)) == s
    assert conjugate(s).size == s.size


@given(shapes(max_size=7))
def test_du_minus_ud_is_identity(s):
    assert up_down_commutator(s) == Counter({s: 1})


def test_hook_length_values():
    assert syt_count(Shape.of(2, 1)) == 2
    assert syt_count(Shape.of(3, 2)) == 5
    assert syt_count(Shape.of(3, 2, 1)) == 16
    assert syt_count(EMPTY) == 1


@pytest.mark.parametrize("n", range(7))
def test_sum_of_squares_is_factorial(n):
    assert sum(syt_count(s) ** 2 for s in iter_shapes(n)) == factorial(n)


@given(shapes(max_size=6))
def test_iter_syt_matches_hook_formula(s):
    tabs = list(iter_syt(s))
    assert len(tabs) == syt_count(s)
    assert len(set(tabs)) == len(tabs)
    assert all(t.shape == s for t in tabs)


def test_tableau_validation():
    with pytest.raises(InvalidTableauError):
        StandardTableau.from_rows([[1, 3], [2, 4], [5, 6, 7]])
    with pytest.raises(InvalidTableauError):
        StandardTableau.from_rows([[2, 1]])
    with pytest.raises(InvalidTableauError):
        StandardTableau.from_rows([[1, 2], [1]])


def test_row_insert_bumps():
    t = StandardTableau.from_rows([[1, 3], [2]])
    t2, path = row_insert(t, 4)
    assert t2.rows == ((1, 3, 4), (2,))
    assert path == ((1, 3),)
    t3, path = row_insert(StandardTableau.from_rows([[2, 5]]), 3)
    assert t3.rows == ((2, 3), (5,))
    assert path == ((1, 2), (2, 1))


def test_row_insert_rejects_duplicates():
    with pytest.raises(DuplicateEntryError):
        row_insert(StandardTableau.from_rows([[1, 3]]), 3)


@given(tableaux(), st.integers(min_value=1, max_value=40))
def test_reverse_insert_undoes_row_insert(t, v):
    assume(v not in t.content)
    bigger, path = row_insert(t, v)
    back, out = reverse_insert(bigger, path[-1])
    assert (back, out) == (t, v)


def test_reverse_insert_needs_a_corner():
    t = StandardTableau.from_rows([[1, 3], [2]])
    with pytest.raises(InvalidCornerError):
        reverse_insert(t, (1, 1))


def test_delete_entry_only_from_corners():
    t = StandardTableau.from_rows([[1, 3], [2]])
    assert delete_entry(t, 3).rows == ((1,), (2,))
    with pytest.raises(InvalidCornerError):
        delete_entry(t, 1)


def test_tableau_from_chain():
    chain = [EMPTY, Shape.of(1), Shape.of(1, 1), Shape.of(2, 1)]
    assert tableau_from_chain(chain).rows == ((1, 3), (2,))
    with pytest.raises(InvalidTableauError):
        tableau_from_chain([EMPTY, Shape.of(2)])
    assert tableau_from_chain([EMPTY]) == EMPTY_TABLEAU


def test_rsk_of_231():
    a, b = rsk((2, 3, 1))
    assert a.rows == ((1, 3), (2,))
    assert b.rows == ((1, 2), (3,))


@given(permutations())
def test_schensted_row_and_column(w):
    shape = rsk(w)[0].shape
    assert lis_length(w) == shape.cols
    assert lds_length(w) == shape.rows


@given(permutations(max_size=6), st.integers(min_value=1, max_value=3))
def test_greene_sums(w, k):
    shape = rsk(w)[0].shape
    assert greene_increasing(w, k) == sum(shape.parts[:k])
    assert greene_decreasing(w, k) == sum(conjugate(shape).parts[:k])
