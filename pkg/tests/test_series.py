from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankcrank.moments import partitions
from rankcrank.series import (
    BiSeries,
    QSeries,
    bi_mul_linear,
    bi_mul_linear_inverse,
    bi_mul_series,
    convolve_ints,
    delta_q,
    divisor_series,
    eisenstein_series,
    partition_numbers,
    partition_series,
    pentagonal_series,
    series_inverse,
    series_mul,
)
from rankcrank.bernoulli import bernoulli_number


def naive_mul(a, b, order):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(order + 1)]


def naive_euler_product(order):
    coeffs = [1] + [0] * order
    for m in range(1, order + 1):
        coeffs = [c - (coeffs[n - m] if n >= m else 0) for n, c in enumerate(coeffs)]
    return coeffs


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
ints = st.integers(min_value=-(10**30), max_value=10**30)


# -- multiplication -----------------------------------------------------------


def test_difference_of_squares():
    assert QSeries([1, 1, 0, 0]) * QSeries([1, -1, 0, 0]) == QSeries([1, 0, -1, 0])


def test_partition_series_times_euler_product_is_one():
    t = 60
    assert partition_series(t) * pentagonal_series(t) == QSeries.one(t)


def test_coefficient_of_p_squared():
    # p(0..4) = 1, 1, 2, 3, 5 convolved with itself at index 4
    p = [1, 1, 2, 3, 5]
    expected = sum(p[i] * p[4 - i] for i in range(5))
    assert expected == 20
    assert (partition_series(4) * partition_series(4))[4] == 20


def test_mismatched_orders_truncate_to_minimum():
    a = QSeries([1, 2, 3, 4, 5])
    b = QSeries([1, 1])
    assert (a * b).order == 1
    assert (a + b).order == 1


@given(st.lists(ints, min_size=1, max_size=40), st.lists(ints, min_size=1, max_size=40))
def test_convolve_ints_matches_naive(a, b):
    n = max(len(a), len(b))
    pa = a + [0] * (n - len(a))
    pb = b + [0] * (n - len(b))
    assert convolve_ints(a, b, n) == naive_mul(pa, pb, n - 1)


@settings(max_examples=50)
@given(
    st.lists(rationals, min_size=8, max_size=8),
    st.lists(rationals, min_size=8, max_size=8),
    st.lists(rationals, min_size=8, max_size=8),
)
def test_ring_laws(a, b, c):
    a, b, c = QSeries(a), QSeries(b), QSeries(c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert list((a * b).coeffs) == naive_mul(a.coeffs, b.coeffs, 7)


# -- inverse --------------------------------------------------------------------


def test_geometric_series():
    assert series_inverse(QSeries([1, -1] + [0] * 8)) == QSeries([1] * 10)


def test_inverse_of_partition_series_is_pentagonal():
    t = 100
    inv = series_inverse(partition_series(t))
    assert list(inv.coeffs) == naive_euler_product(t)
    assert inv.integers()[:8] == [1, -1, -1, 0, 0, 1, 0, 1]


@settings(max_examples=40)
@given(st.lists(rationals, min_size=1, max_size=15).filter(lambda v: v[0] != 0))
def test_inverse_is_involution_and_inverts(coeffs):
    a = QSeries(coeffs)
    inv = series_inverse(a)
    assert a * inv == QSeries.one(a.order)
    assert series_inverse(inv) == a


def test_inverse_rejects_zero_constant():
    with pytest.raises(ValueError):
        series_inverse(QSeries([0, 1, 2]))


# -- partition numbers ----------------------------------------------------------


def test_partition_numbers_against_enumeration():
    assert partition_numbers(20) == [sum(1 for _ in partitions(n)) for n in range(21)]
    assert partition_numbers(0) == [1]
    assert partition_numbers(4)[4] == 5


def test_partition_numbers_large_values():
    p = partition_numbers(200)
    assert p[100] == 190569292
    assert p[200] == 3972999029388


def test_partition_numbers_nonnegative_nondecreasing():
    p = partition_numbers(500)
    assert all(v > 0 for v in p)
    assert all(p[n] <= p[n + 1] for n in range(1, 500))


@pytest.mark.parametrize("mod,res", [(5, 4), (7, 5), (11, 6)])
def test_ramanujan_congruences(mod, res):
    p = partition_numbers(mod * 50 + res)
    assert all(p[mod * n + res] % mod == 0 for n in range(51))


# -- delta_q, divisor sums, Eisenstein --------------------------------------------


def test_delta_q():
    assert delta_q(QSeries.one(5)) == QSeries([0] * 6)
    assert delta_q(QSeries.monomial(3, 5)) == QSeries.monomial(3, 5, 3)
    assert delta_q(partition_series(10))[4] == 4 * 5


def test_divisor_series_against_brute_force():
    for j in (1, 3, 5, 7):
        phi = divisor_series(j, 40)
        assert phi[0] == 0
        for n in range(1, 41):
            assert phi[n] == sum(d**j for d in range(1, n + 1) if n % d == 0)
    assert divisor_series(1, 6)[6] == 12
    assert divisor_series(3, 4)[4] == 73
    assert divisor_series(1, 1)[1] == 1


def test_eisenstein_e2_and_round_trip():
    e2 = eisenstein_series(2, 5)
    assert e2.coeffs[:3] == (1, -24, -72)
    for k in (2, 4, 6, 8, 10, 12):
        ek = eisenstein_series(k, 30)
        assert ek[0] == 1
        back = (ek - QSeries.one(30)) * (-bernoulli_number(k) / (2 * k))
        assert back == divisor_series(k - 1, 30)


def test_eisenstein_e4_e6_integral():
    assert eisenstein_series(4, 3).coeffs == (1, 240, 2160, 6720)
    assert eisenstein_series(6, 2).coeffs == (1, -504, -16632)


@pytest.mark.parametrize("k", [0, 3, -2])
def test_eisenstein_rejects_bad_weight(k):
    with pytest.raises(ValueError):
        eisenstein_series(k, 5)


def test_qseries_scalar_and_truncate():
    a = QSeries([1, 2, 3])
    assert (a * Fraction(1, 2)).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))
    assert a.truncate(1) == QSeries([1, 2])
    with pytest.raises(ValueError):
        a.truncate(5)


# -- bivariate ------------------------------------------------------------------


def test_linear_inverse_geometric():
    g = bi_mul_linear_inverse(BiSeries.one(6), 1, 1)
    for n in range(7):
        assert g.row(n) == {n: 1}


def test_linear_inverse_pair_round_trips():
    base = bi_mul_linear_inverse(bi_mul_linear_inverse(BiSeries.one(12), -1, 2), 1, 3)
    for s in (1, -1):
        for m in (1, 2, 5):
            assert bi_mul_linear(bi_mul_linear_inverse(base, s, m), s, m) == base


def test_x0_q2_coefficient():
    # (sum x^i q^i)(sum x^-j q^j): x^0 q^2 needs i = j = 1
    two = bi_mul_linear_inverse(bi_mul_linear_inverse(BiSeries.one(4), 1, 1), -1, 1)
    assert two.coeff(0, 2) == 1
    assert two.row(2) == {-2: 1, 0: 1, 2: 1}


def test_bi_mul_series_at_x_equals_one():
    t = 15
    g = bi_mul_linear_inverse(bi_mul_linear_inverse(BiSeries.one(t), 1, 2), -1, 1)
    f = partition_series(t)
    prod = bi_mul_series(g, f)
    expect = series_mul(QSeries(g.row_sums()), f)
    assert QSeries(prod.row_sums()) == expect


def test_bi_series_rejects_high_x_degree():
    with pytest.raises(ValueError):
        BiSeries.from_rows([{0: 1}, {2: 1}])
