from __future__ import annotations

import pytest

from crossnest.counting.numbers import double_factorial
from crossnest.counting.series import ExactPoly
from crossnest.counting.transfer import (
    IntMatrix,
    bipartite_balance,
    char_poly,
    eigenvalue_form_check,
    gaussian_at_minus_one,
    gaussian_binomial,
    gkj_count,
    gkj_sequence,
    is_invertible,
    lattice_rank,
    nonsingular_mod_p,
    p_kj,
    rank_report,
    rect_lattice,
)
from crossnest.errors import BoundExceededError, InvalidArgumentError, NonSquareMatrixError
from crossnest.settings import get_settings
from crossnest.tools.verify import INVERTIBLE_PAIRS, expected_p_kj


def test_smallest_lattice():
    full, reduced = rect_lattice(1, 1)
    assert full.rows == ((0, 1), (1, 0))
    assert reduced.rows == ((0,),)
    assert full.is_symmetric
    assert full.edge_count == 1


def test_lattice_dimension_is_a_binomial():
    full, reduced = rect_lattice(2, 3)
    assert full.dim == 10
    assert reduced.dim == 9


def test_int_matrix_must_be_square():
    with pytest.raises(NonSquareMatrixError):
        IntMatrix(((1, 2),))


def test_char_poly_of_small_matrices():
    assert char_poly(IntMatrix(())) == ExactPoly.of(1)
    assert char_poly(IntMatrix(((0, 1), (1, 0)))) == ExactPoly.of(1, 0, -1)


@pytest.mark.parametrize("k, j", [(k, j) for j in range(1, 4) for k in range(1, j + 1)])
def test_p_kj_factorisations(k, j):
    assert p_kj(k, j) == expected_p_kj(k, j)


def test_p_kj_examples():
    assert p_kj(2, 2) == ExactPoly.of(1, -6, 5)
    assert p_kj(1, 3) == ExactPoly.of(1, -3, 1)
    assert p_kj(2, 3) == p_kj(3, 2)


def test_rank_of_the_2x2_box():
    assert lattice_rank(2, 2) == (4, 2)
    report = rank_report(2, 2)
    assert (report.dim, report.rank, report.corank) == (6, 4, 2)
    assert report.twice_degree == 4
    assert report.consistent is True
    assert not report.invertible
    assert rank_report(2, 2, with_degree=False).consistent is None


@pytest.mark.parametrize("k, j", [(1, 2), (2, 3), (3, 3), (2, 4)])
def test_rank_agrees_with_twice_the_degree(k, j):
    assert rank_report(k, j).consistent


def test_invertible_boxes():
    found = sorted(
        (k, j) for j in range(1, 8) for k in range(1, j + 1) if k + j <= 8 and is_invertible(k, j)
    )
    assert found == sorted(pr for pr in INVERTIBLE_PAIRS if pr[0] + pr[1] <= 8)


def test_nonsingular_mod_p():
    assert nonsingular_mod_p([[1, 1], [0, 1]], 7)
    assert not nonsingular_mod_p([[2]], 2)
    assert not nonsingular_mod_p([[1, 2], [2, 4]], 1000000007)


@pytest.mark.parametrize("k, j", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_series_coefficients_count_walks(k, j):
    assert gkj_sequence(k, j, 6) == [gkj_count(k, j, m) for m in range(7)]


def test_walk_count_values():
    assert [gkj_count(1, 1, m) for m in range(6)] == [1] * 6
    assert gkj_count(3, 3, 3) == double_factorial(5)
    assert gkj_count(2, 3, 4) == gkj_count(3, 2, 4)


def test_bad_box():
    with pytest.raises(InvalidArgumentError):
        rect_lattice(0, 2)
    with pytest.raises(InvalidArgumentError):
        gkj_count(2, 2, -1)


def test_gaussian_binomials():
    assert gaussian_binomial(2, 2) == (1, 1, 2, 1, 1)
    assert gaussian_binomial(0, 3) == (1,)
    assert gaussian_at_minus_one(2, 2) == 2
    assert bipartite_balance(2, 2) == (4, 2)


@pytest.mark.parametrize("k, j", [(1, 1), (2, 2), (2, 3), (3, 4)])
def test_balance_is_the_gaussian_binomial_at_minus_one(k, j):
    even, odd = bipartite_balance(k, j)
    assert even - odd == gaussian_at_minus_one(k, j)
    assert even + odd == sum(gaussian_binomial(k, j))


def test_eigenvalues_have_the_cosine_form():
    report = eigenvalue_form_check(2, 2)
    assert report.ok
    assert report.modulus == 5
    assert len(report.matches) == 6


def test_eigen_dimension_bound(monkeypatch):
    monkeypatch.setenv("CROSSNEST_EIGEN_MAX_DIM", "5")
    get_settings.cache_clear()
    with pytest.raises(BoundExceededError):
        eigenvalue_form_check(2, 2)
