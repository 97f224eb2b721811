from fractions import Fraction

import pytest

from bridgecensus.counting import (
    PUBLISHED_EK,
    binomial,
    census_cost,
    cumulative_tk,
    ek,
    ek_census,
    ek_upper_bound,
    expansion_coefficient,
    g,
    genfun,
    inverse_targets,
    is_palindromic,
    symmetric_count,
    tk,
)
from bridgecensus.errors import BudgetExceeded, OutOfRange
from bridgecensus.knot import canonicalize

TREFOIL_SERIES = [
    3, 4, 7, 8, 11, 12, 25, 48, 103, 180,
    309, 472, 743, 1180, 2045, 3584, 6391,
]
FIVE_TWO_SERIES = [
    4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 60, 112, 212, 376, 620, 960,
]


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(7, 0) == 1
    assert binomial(5, 5) == 1
    for a in range(1, 40):
        for b in range(1, a):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)
    with pytest.raises(OutOfRange):
        binomial(3, 4)
    with pytest.raises(OutOfRange):
        binomial(3, -1)


@pytest.mark.parametrize(
    "n, expected",
    [(3, 1), (4, 1), (5, 2), (6, 3), (7, 7), (8, 12), (9, 24), (12, 176)],
)
def test_tk(n, expected):
    assert tk(n) == expected


def test_tk_rejects_small_n():
    with pytest.raises(OutOfRange):
        tk(2)


def test_cumulative_tk_table():
    columns = [9, 12, 15, 18, 21, 24, 27, 30]
    expected = [1, 2, 4, 7, 14, 26, 50, 95]
    for start, value in zip(columns, expected):
        for n in range(start, start + 3):
            assert cumulative_tk(n) == value
    assert cumulative_tk(8) == 0


def test_ek_upper_bound():
    assert ek_upper_bound(50) == 7
    assert ek_upper_bound(9) == 1
    assert ek_upper_bound(3) == 0


def test_is_palindromic():
    assert is_palindromic((3,))
    assert not is_palindromic((2, 3))
    assert is_palindromic((2, 2, 1, 2, 2))


def test_palindromic_correction():
    assert symmetric_count(1, 0) == 2
    assert symmetric_count(2, 3) == 0
    for n in range(1, 5):
        for k in range(0, 12):
            if k % 2:
                assert g(n, k) == expansion_coefficient(n, k) // 2
                assert g(n, k) % 2 == 0
            else:
                assert g(n, k) == (
                    2 ** (2 * n - 1) * binomial(2 * n + k - 1, k)
                    + 2 ** (n - 1) * binomial(n + k // 2 - 1, k // 2)
                )


def test_genfun_trefoil(trefoil):
    series = genfun(trefoil, 25)
    assert [series.coefficient(c) for c in range(9, 26)] == TREFOIL_SERIES
    assert all(series.coefficient(c) == 0 for c in range(0, 9))
    assert series.truncation == 25


def test_genfun_five_two():
    series = genfun(canonicalize(Fraction(3, 7)), 30)
    assert [series.coefficient(c) for c in range(15, 31)] == FIVE_TWO_SERIES


def test_genfun_figure_eight(figure_eight):
    assert genfun(figure_eight, 12).coefficient(12) == 3


def test_genfun_keys(trefoil):
    series = genfun(trefoil, 40)
    assert min(series.coeffs) == 9
    assert max(series.coeffs) == 40


def test_genfun_rejects_small_truncation(trefoil):
    with pytest.raises(OutOfRange):
        genfun(trefoil, 2)


def test_inverse_targets(trefoil):
    found = inverse_targets(trefoil, 9)
    assert set(found) == {(1, 9), (5, 27), (19, 45)}
    assert set(found.values()) == {trefoil}


@pytest.mark.parametrize("n", range(3, 25))
def test_ek_matches_published(n):
    value = ek(n)
    assert value == PUBLISHED_EK[n]
    assert value <= ek_upper_bound(n)
    assert value <= cumulative_tk(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(25, 31))
def test_ek_long_range(n):
    assert ek(n) == PUBLISHED_EK[n]


def test_ek_bound_method():
    assert ek(50, method="bound") == 7


def test_ek_budget():
    assert census_cost(8) == 0
    with pytest.raises(BudgetExceeded):
        ek(15, budget=10)
    with pytest.raises(OutOfRange):
        ek(2)


def test_ek_census_sources_have_exact_crossing():
    census = ek_census(15)
    assert census
    assert all(source.crossing == 15 for source in census)
    assert max(len(found) for found in census.values()) == 2
