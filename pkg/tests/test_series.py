import pytest
from hypothesis import given, strategies as st

from dyckstat import oracle, series
from dyckstat.errors import NotPrime
from dyckstat.series import TruncatedSeries

MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=8)


def test_motzkin_numbers_known_values():
    assert series.motzkin_numbers(12) == MOTZKIN
    assert series.motzkin(-1) == 0
    assert series.motzkin(100) > 0


@pytest.mark.parametrize("m", range(0, 11))
def test_motzkin_matches_enumeration(m):
    assert sum(1 for _ in oracle.enum_motzkin(m)) == series.motzkin(m)


def test_motzkin_functional_equation():
    m = series.motzkin_series(20)
    x = TruncatedSeries.x(20)
    assert m == 1 + x * m + x * x * m * m


@pytest.mark.parametrize("k", range(1, 7))
def test_ballot_three_routes_agree(k):
    gf = series.ballot_gf(k, 12)
    for n in range(13):
        dp = series.ballot_number(n, k)
        assert gf[n] == dp
        assert sum(1 for _ in oracle.enum_ballot(n, k)) == dp


def test_ballot_conventions():
    assert series.ballot_number(2, 3) == 1
    assert series.ballot_number(-1, 2) == 0
    assert series.ballot_number(1, 3) == 0


def test_binom_out_of_range():
    assert series.binom(3, 5) == 0
    assert series.binom(3, -1) == 0
    assert series.binom(5, 2) == 10


def test_shift_and_derivative_orders():
    s = TruncatedSeries((1, 2, 3, 4))
    assert s.shift(2).coeffs == (0, 0, 1, 2)
    assert s.derivative().coeffs == (2, 6, 12)
    with pytest.raises(ValueError):
        TruncatedSeries((1,)).derivative()
    with pytest.raises(ValueError):
        s.truncate(5)


def test_mixed_order_operations_truncate():
    a = TruncatedSeries((1, 1, 1))
    b = TruncatedSeries((1, 1))
    assert (a + b).order == 1
    assert (a * b).coeffs == (1, 2)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    n = min(len(a), len(b), len(c)) - 1
    A, B, C = (TruncatedSeries(tuple(v[: n + 1])) for v in (a, b, c))
    assert A * (B + C) == A * B + A * C
    assert (A * B) * C == A * (B * C)
    assert A * B == B * A
    assert A - A == TruncatedSeries.constant(0, n)


@given(coeff_lists, st.integers(0, 5))
def test_power_matches_repeated_product(a, e):
    A = TruncatedSeries(tuple(a))
    prod = TruncatedSeries.constant(1, A.order)
    for _ in range(e):
        prod = prod * A
    assert A**e == prod


def test_prime_guard():
    assert series.is_prime(13) and not series.is_prime(15) and not series.is_prime(1)
    for p in (1, 2, 4, 9):
        with pytest.raises(NotPrime):
            series.gf_Lp(p, 5)


def test_l2_gf_values():
    assert list(series.gf_L2(10)) == [0, 0, 1, 0, 1, 2, 6, 16, 45, 126, 357]
