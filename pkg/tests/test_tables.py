from __future__ import annotations

import pytest

from crossnest.counting.numbers import bell, catalan
from crossnest.counting.tables import (
    DistributionTable,
    ObjectKind,
    TableFilter,
    brute_force_profile_size,
    distribution,
    distribution_by_profile,
    g_lambda_product_sum,
    merge_tables,
    nc_count,
    ncn,
    nn_count,
)
from crossnest.errors import (
    BoundExceededError,
    ConsistencyError,
    InvalidArgumentError,
    OddLengthError,
)
from crossnest.settings import get_settings


@pytest.mark.parametrize(
    "n, cells",
    [
        (0, {(0, 0): 1}),
        (3, {(0, 0): 1, (1, 1): 4}),
        (4, {(0, 0): 1, (1, 1): 12, (1, 2): 1, (2, 1): 1}),
    ],
)
def test_partition_tables(n, cells):
    t = distribution("partitions", n)
    assert dict(t.cells) == cells
    assert t.total == bell(n)
    assert t.is_symmetric()


def test_filtered_table():
    flt = TableFilter(frozenset({1, 2}), frozenset({3, 4}))
    t = distribution(ObjectKind.PARTITIONS, 4, flt)
    assert dict(t.cells) == {(2, 1): 1, (1, 2): 1}
    assert not t.enhanced


def test_bar_filter_defaults_to_enhanced_statistics():
    flt = TableFilter(frozenset({1}), frozenset({3}), bar=True)
    t = distribution("partitions", 3, flt)
    assert t.enhanced
    assert t.is_symmetric()


def test_matching_table():
    t = distribution("matchings", 4)
    assert dict(t.cells) == {(1, 1): 1, (2, 1): 1, (1, 2): 1}
    assert distribution("matchings", 6).total == 15


def test_odd_matchings_rejected():
    with pytest.raises(OddLengthError):
        distribution("matchings", 3)


def test_negative_n_rejected():
    with pytest.raises(InvalidArgumentError):
        distribution("partitions", -1)


def test_bound_and_shards():
    with pytest.raises(BoundExceededError, match="--shards"):
        distribution("partitions", 11)


def test_bound_is_configurable(monkeypatch):
    monkeypatch.setenv("CROSSNEST_PARTITION_BOUND", "3")
    get_settings.cache_clear()
    with pytest.raises(BoundExceededError):
        distribution("partitions", 4)


@pytest.mark.slow
def test_sharded_table_matches_single_process():
    assert distribution("partitions", 6, shards=2).cells == distribution("partitions", 6).cells
    assert distribution("matchings", 6, shards=3).cells == distribution("matchings", 6).cells


def test_csv_rendering():
    csv = distribution("partitions", 3).to_csv()
    assert csv == "cr,ne,count\n0,0,1\n1,1,4\n"


def test_merge_tables():
    a = DistributionTable(ObjectKind.PARTITIONS, 4, cells={(1, 1): 2, (0, 0): 1})
    b = DistributionTable(ObjectKind.PARTITIONS, 4, cells={(1, 1): 3})
    merged = merge_tables([a, b])
    assert dict(merged.cells) == {(1, 1): 5, (0, 0): 1}
    with pytest.raises(ConsistencyError):
        merge_tables([a, DistributionTable(ObjectKind.PARTITIONS, 5)])
    with pytest.raises(ConsistencyError):
        merge_tables([])


@pytest.mark.parametrize("bar", [False, True])
def test_every_profile_table_is_symmetric(bar):
    tables = distribution_by_profile("partitions", 5, bar=bar)
    assert sum(t.total for t in tables.values()) == bell(5)
    assert all(t.is_symmetric() for t in tables.values())


def test_profile_sizes():
    assert brute_force_profile_size(4, {1, 2}, {3, 4}) == 2
    assert brute_force_profile_size(3, {1}, {1}) == 0
    tables = distribution_by_profile("partitions", 4)
    key = (frozenset({1, 2}), frozenset({3, 4}))
    assert tables[key].total == 2


@pytest.mark.parametrize("n", range(7))
def test_walk_counts_of_bounded_partitions(n):
    assert nc_count(2, n) == catalan(n)
    assert nn_count(2, n) == catalan(n)
    assert ncn(None, None, n) == bell(n)


def test_ncn_against_the_table():
    t = distribution("partitions", 6)
    for k in range(1, 5):
        for l in range(1, 5):
            brute = sum(c for (i, j), c in t.cells.items() if i < k and j < l)
            assert ncn(k, l, 6) == brute


def test_ncn_rejects_zero_bounds():
    with pytest.raises(InvalidArgumentError):
        ncn(0, None, 3)


def test_shape_product_sum_is_bell():
    assert g_lambda_product_sum(2, 3) == bell(5)
    assert g_lambda_product_sum(0, 4) == bell(4)
