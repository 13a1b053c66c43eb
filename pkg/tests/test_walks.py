from __future__ import annotations

import pytest
from hypothesis import given
from strategies import matchings, permutations, set_partitions

from crossnest.counting.numbers import bell
from crossnest.engine import walks as walks_module
from crossnest.engine.setpart import max_set, min_set, parse_partition
from crossnest.engine.stats import cr_ne
from crossnest.engine.walks import (
    WalkKind,
    conjugate_walk,
    count_walks,
    iter_walks,
    matching_to_oscillating,
    min_max_from_walk,
    opener_closer_from_walk,
    oscillating_to_matching,
    parse_walk,
    permutation_matching,
    phi,
    phi_bar,
    psi,
    psi_bar,
    rsk_via_oscillating,
    trace_psi,
    validate_walk,
    walk_distribution,
)
from crossnest.engine.young import EMPTY, EMPTY_TABLEAU, Shape, rsk
from crossnest.errors import NotClosedError, OddLengthError, StepViolationError
from crossnest.settings import get_settings

PARTITION = parse_partition("1457-26-3")
PHI_WALK = "∅,∅,1,1,11,11,11,1,2,1,11,1,1,∅,∅"
PHI_BAR_WALK = "∅,∅,1,1,11,21,11,21,2,21,11,1,1,∅,∅"


def test_phi_of_the_running_example():
    walk, trace = phi(PARTITION)
    assert str(walk) == PHI_WALK
    assert len(trace.tableaux) == 15
    assert walk.max_rows == 2 and walk.max_cols == 2


def test_phi_bar_of_the_running_example():
    walk, _ = phi_bar(PARTITION)
    assert str(walk) == PHI_BAR_WALK
    validate_walk(walk)


def test_psi_of_an_open_walk_leaves_a_tableau():
    walk = parse_walk("∅,∅,1,1,2,2,2,2,21,21,211,21,21,11,21", WalkKind.VACILLATING)
    p, t = psi(walk)
    assert p == parse_partition("1-26-3-47-5")
    assert t.rows == ((1, 7), (5,))
    assert t.content <= max_set(p)


def test_psi_of_a_short_walk():
    p, t = psi(parse_walk("∅,∅,1,∅,1,∅,∅", WalkKind.VACILLATING))
    assert p == parse_partition("123")
    assert t == EMPTY_TABLEAU
    assert str(phi(parse_partition("13-2"))[0]) == "∅,∅,1,1,1,∅,∅"


def test_trace_psi_records_every_tableau():
    walk, _ = phi(PARTITION)
    p, t, trace = trace_psi(walk)
    assert p == PARTITION and t == EMPTY_TABLEAU
    assert len(trace.tableaux) == walk.length + 1
    assert sorted(trace.pair_events) == [(1, 4), (2, 6), (4, 5), (5, 7)]


@given(set_partitions())
def test_psi_inverts_phi(p):
    walk, _ = phi(p)
    validate_walk(walk)
    assert walk.is_closed
    assert psi(walk) == (p, EMPTY_TABLEAU)


@given(set_partitions(max_n=7))
def test_psi_bar_inverts_phi_bar(p):
    walk, _ = phi_bar(p)
    validate_walk(walk)
    assert psi_bar(walk) == p


@given(set_partitions())
def test_walk_shape_extremes_are_the_statistics(p):
    walk, _ = phi(p)
    assert (walk.max_rows, walk.max_cols) == cr_ne(p)


@given(set_partitions())
def test_min_max_read_off_the_walk(p):
    walk, _ = phi(p)
    assert min_max_from_walk(walk) == (min_set(p), max_set(p))
    lo, hi = min_set(p), max_set(p)
    assert opener_closer_from_walk(walk) == (lo - hi, hi - lo)
    assert opener_closer_from_walk(phi_bar(p)[0]) == (lo - hi, hi - lo)


@given(set_partitions())
def test_conjugation_swaps_cr_and_ne(p):
    q, _ = psi(conjugate_walk(phi(p)[0]))
    c, n = cr_ne(p)
    assert cr_ne(q) == (n, c)
    assert (min_set(q), max_set(q)) == (min_set(p), max_set(p))


def test_validate_reports_the_first_bad_index():
    with pytest.raises(StepViolationError) as info:
        validate_walk(parse_walk("∅,1,1", WalkKind.VACILLATING))
    assert info.value.index == 1
    with pytest.raises(StepViolationError) as info:
        validate_walk(parse_walk("∅,∅,1,2", WalkKind.OSCILLATING))
    assert info.value.index == 1
    with pytest.raises(StepViolationError):
        validate_walk(parse_walk("1,∅", WalkKind.OSCILLATING))


def test_hesitating_pairs_are_enforced():
    with pytest.raises(StepViolationError) as info:
        validate_walk(parse_walk("∅,1,11", WalkKind.HESITATING))
    assert info.value.index == 2


def test_open_hesitating_walk_is_rejected():
    with pytest.raises(NotClosedError):
        psi_bar(parse_walk("∅,∅,1", WalkKind.HESITATING))


def test_oscillating_walk_of_231():
    w = (2, 3, 1)
    m = permutation_matching(w)
    assert m == parse_partition("14-26-35")
    assert str(matching_to_oscillating(m)) == "∅,1,11,21,2,1,∅"
    a, b = rsk_via_oscillating(w)
    assert a.rows == ((1, 3), (2,))
    assert b.rows == ((1, 2), (3,))


@given(permutations(max_size=6))
def test_rsk_through_the_oscillating_walk(w):
    assert rsk_via_oscillating(w) == rsk(w)


def test_figure_matching_walk_round_trips():
    walk = parse_walk("∅,1,2,21,31,21,11,21,2,1,∅", WalkKind.OSCILLATING)
    m = oscillating_to_matching(walk)
    assert m.n == 10
    assert matching_to_oscillating(m) == walk


@given(matchings())
def test_oscillating_round_trip(m):
    walk = matching_to_oscillating(m)
    assert walk.length == m.n
    assert oscillating_to_matching(walk) == m


@pytest.mark.parametrize("n", range(9))
def test_closed_vacillating_walks_are_bell(n):
    assert count_walks(WalkKind.VACILLATING, EMPTY, 2 * n) == bell(n)


@pytest.mark.parametrize("kind", list(WalkKind))
def test_enumeration_agrees_with_the_count(kind):
    length = 6
    for end in (EMPTY, Shape.of(1), Shape.of(2), Shape.of(1, 1)):
        if kind is WalkKind.OSCILLATING and end.size % 2:
            continue
        walks = list(iter_walks(kind, length, end))
        assert len(walks) == count_walks(kind, end, length)
        for w in walks:
            validate_walk(w)


def test_box_restricts_the_distribution():
    free = walk_distribution(WalkKind.OSCILLATING, 8)
    boxed = walk_distribution(WalkKind.OSCILLATING, 8, 1, 1)
    assert dict(boxed) == {EMPTY: 1}
    assert free[EMPTY] == 105


def test_odd_lengths_are_rejected():
    with pytest.raises(OddLengthError):
        walk_distribution(WalkKind.VACILLATING, 3)
    with pytest.raises(OddLengthError):
        walk_distribution(WalkKind.HESITATING, -2)


@pytest.mark.parametrize("n", range(5))
def test_every_closed_vacillating_walk_round_trips(n):
    walks = list(iter_walks(WalkKind.VACILLATING, 2 * n, EMPTY))
    assert len(walks) == bell(n)
    for w in walks:
        p, tableau = psi(w)
        assert tableau == EMPTY_TABLEAU
        assert phi(p)[0] == w


@pytest.mark.parametrize("n", range(5))
def test_every_closed_hesitating_walk_round_trips(n):
    walks = list(iter_walks(WalkKind.HESITATING, 2 * n, EMPTY))
    assert len(walks) == bell(n)
    for w in walks:
        assert phi_bar(psi_bar(w))[0] == w


def test_walk_memo_follows_the_size_setting(monkeypatch):
    monkeypatch.setenv("CROSSNEST_WALK_MEMO_SIZE", "3")
    get_settings.cache_clear()
    assert walk_distribution(WalkKind.VACILLATING, 4)[EMPTY] == 2
    assert walks_module._memo().cache_info().maxsize == 3
    monkeypatch.setenv("CROSSNEST_WALK_MEMO_SIZE", "64")
    get_settings.cache_clear()
    assert walk_distribution(WalkKind.VACILLATING, 6)[EMPTY] == 5
    assert walks_module._memo().cache_info().maxsize == 64
