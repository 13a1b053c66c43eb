from __future__ import annotations

from itertools import combinations

import pytest

from crossnest.counting.numbers import catalan, three_noncrossing_matchings
from crossnest.counting.tables import profile_of
from crossnest.engine.paths import (
    LatticePath,
    dyck_from_matching_k2,
    dyck_pair_from_matching_k3,
    dyck_paths,
    matching_from_dyck_k2,
    matching_from_dyck_pair_k3,
    motzkin_profile,
    noncrossing_dyck_pairs,
    noncrossing_from_motzkin,
    nonnesting_from_motzkin,
    profile_is_nonempty,
    profile_sets,
)
from crossnest.engine.setpart import parse_partition, partitions_iter
from crossnest.engine.stats import is_noncrossing_partition, is_nonnesting_partition
from crossnest.errors import (
    CardinalityMismatchError,
    CrossingBoundError,
    InvalidProfileError,
    NotAMatchingError,
    PathsCrossError,
)


def test_lattice_path_parsing_and_heights():
    p = LatticePath.parse("UFDUD")
    assert p.heights == (0, 1, 1, 0, 1, 0)
    assert p.is_motzkin and not p.is_dyck
    assert LatticePath.from_heights([0, 1, 2, 1, 0]) == LatticePath.parse("UUDD")
    with pytest.raises(InvalidProfileError):
        LatticePath.parse("UXD")
    with pytest.raises(InvalidProfileError):
        LatticePath.from_heights([0, 2])


def test_profile_recovers_both_extremal_partitions():
    S, T = frozenset({1, 2}), frozenset({3, 4})
    path = motzkin_profile(S, T, 4)
    assert path.is_motzkin
    assert noncrossing_from_motzkin(path, S, T) == parse_partition("14-23")
    assert nonnesting_from_motzkin(path, S, T) == parse_partition("13-24")
    assert profile_sets(path) == (S, T, 4)


def test_empty_profile_dips_below_zero():
    S, T = frozenset({2}), frozenset({1})
    path = motzkin_profile(S, T, 2)
    assert not path.is_motzkin
    assert not profile_is_nonempty(S, T, 2)
    with pytest.raises(InvalidProfileError):
        noncrossing_from_motzkin(path, S, T)


def test_profile_needs_equal_sizes_inside_the_ground_set():
    with pytest.raises(CardinalityMismatchError):
        motzkin_profile({1, 2}, {2}, 3)
    with pytest.raises(CardinalityMismatchError):
        motzkin_profile({1}, {5}, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_nonemptiness_criterion_is_exact(n):
    realized = {profile_of(p) for p in partitions_iter(n)}
    ground = range(1, n + 1)
    for size in range(n + 1):
        for s in combinations(ground, size):
            for t in combinations(ground, size):
                st = (frozenset(s), frozenset(t))
                assert profile_is_nonempty(st[0], st[1], n) == (st in realized)


@pytest.mark.parametrize("n", range(7))
def test_recovery_round_trips_and_is_catalan(n):
    profiles = {profile_of(p) for p in partitions_iter(n)}
    assert len(profiles) == catalan(n)
    for S, T in profiles:
        path = motzkin_profile(S, T, n)
        nc = noncrossing_from_motzkin(path, S, T)
        nn = nonnesting_from_motzkin(path, S, T)
        assert is_noncrossing_partition(nc) and profile_of(nc) == (S, T)
        assert is_nonnesting_partition(nn) and profile_of(nn) == (S, T)


def test_dyck_paths_for_noncrossing_matchings():
    assert dyck_from_matching_k2(parse_partition("12-34")) == LatticePath.parse("UDUD")
    assert dyck_from_matching_k2(parse_partition("14-23")) == LatticePath.parse("UUDD")
    assert matching_from_dyck_k2(LatticePath.parse("UUDD")) == parse_partition("14-23")


def test_dyck_guards():
    with pytest.raises(CrossingBoundError):
        dyck_from_matching_k2(parse_partition("13-24"))
    with pytest.raises(NotAMatchingError):
        dyck_from_matching_k2(parse_partition("123"))
    with pytest.raises(InvalidProfileError):
        matching_from_dyck_k2(LatticePath.parse("UFD"))


@pytest.mark.parametrize("m", range(7))
def test_dyck_bijection_round_trips(m):
    paths = list(dyck_paths(m))
    assert len(paths) == catalan(m)
    for path in paths:
        assert dyck_from_matching_k2(matching_from_dyck_k2(path)) == path


@pytest.mark.parametrize("m", range(5))
def test_dyck_pairs_for_3_noncrossing_matchings(m):
    pairs = list(noncrossing_dyck_pairs(m))
    assert len(pairs) == three_noncrossing_matchings(m)
    for upper, lower in pairs:
        assert dyck_pair_from_matching_k3(matching_from_dyck_pair_k3(upper, lower)) == (
            upper,
            lower,
        )


def test_dyck_pair_guards():
    with pytest.raises(PathsCrossError):
        matching_from_dyck_pair_k3(LatticePath.parse("UDUD"), LatticePath.parse("UUDD"))
    with pytest.raises(InvalidProfileError):
        matching_from_dyck_pair_k3(LatticePath.parse("UD"), LatticePath.parse("UUDD"))
    with pytest.raises(CrossingBoundError):
        dyck_pair_from_matching_k3(parse_partition("[1,4]-[2,5]-[3,6]"))

