from __future__ import annotations

import pytest

from crossnest.counting.chambers import Stepping, chamber_walk_count, gk1_reflection
from crossnest.counting.numbers import catalan, three_noncrossing_matchings
from crossnest.counting.tables import nc_count
from crossnest.counting.transfer import gkj_count
from crossnest.errors import InvalidArgumentError, OddLengthError


@pytest.mark.parametrize("m", range(8))
def test_one_dimensional_free_walks_are_catalan(m):
    assert chamber_walk_count(2, 2 * m, Stepping.FREE) == catalan(m)


@pytest.mark.parametrize("m", range(7))
def test_two_dimensional_free_walks_count_3_noncrossing_matchings(m):
    assert chamber_walk_count(3, 2 * m, "free") == three_noncrossing_matchings(m)


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("n", range(6))
def test_vacillating_stepping_counts_k_noncrossing_partitions(k, n):
    assert chamber_walk_count(k, 2 * n, Stepping.VACILLATING) == nc_count(k, n)


def test_zero_dimensional_chamber():
    assert chamber_walk_count(1, 6, Stepping.VACILLATING) == 1
    assert chamber_walk_count(1, 2, Stepping.FREE) == 0


def test_reflection_sum_small_values():
    assert gk1_reflection(1, 1) == 1
    assert gk1_reflection(2, 2) == 2
    assert gk1_reflection(1, 0) == 1


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("m", range(9))
def test_reflection_sum_matches_the_walk_dp(k, m):
    assert gk1_reflection(k, m) == gkj_count(k, 1, m)


def test_bad_arguments():
    with pytest.raises(OddLengthError):
        chamber_walk_count(2, 3, Stepping.FREE)
    with pytest.raises(OddLengthError):
        chamber_walk_count(2, -2, Stepping.FREE)
    with pytest.raises(InvalidArgumentError):
        chamber_walk_count(0, 2, Stepping.FREE)
    with pytest.raises(InvalidArgumentError):
        gk1_reflection(0, 3)
