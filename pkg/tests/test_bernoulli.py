from fractions import Fraction
from itertools import product
from math import comb

import pytest

from rankcrank.bernoulli import (
    bernoulli_half,
    bernoulli_number,
    bernoulli_poly,
    check_convolution_half,
    check_general_convolution,
    check_triple_convolution,
    convolution_half_sides,
    triple_convolution_sides,
)


def faulhaber_bernoulli(n):
    """Independent route: B_n from the Akiyama-Tanigawa algorithm (gives B_1 = +1/2)."""
    a = [Fraction(1, m + 1) for m in range(n + 1)]
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def test_small_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_against_akiyama_tanigawa():
    for n in range(2, 41):
        assert bernoulli_number(n) == faulhaber_bernoulli(n)


def test_odd_vanish():
    assert all(bernoulli_number(n) == 0 for n in range(3, 60, 2))


def test_bernoulli_half_values():
    assert bernoulli_half(0) == 1
    assert bernoulli_half(2) == Fraction(-1, 12)
    assert bernoulli_half(4) == Fraction(7, 240)
    assert bernoulli_half(3) == 0


def test_half_matches_polynomial():
    for n in range(0, 41):
        assert bernoulli_half(n) == bernoulli_poly(n, Fraction(1, 2))


def test_sign_alternation_at_half():
    assert all((-1) ** k * bernoulli_half(2 * k) > 0 for k in range(0, 25))


def test_polynomial_difference_equation():
    # B_n(x + 1) - B_n(x) = n x^(n-1)
    for n in range(1, 12):
        for x in (Fraction(0), Fraction(1, 3), Fraction(-5, 2)):
            assert bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == n * x ** (n - 1)


def test_convolution_half_k1_by_hand():
    lhs, rhs = convolution_half_sides(1)
    assert lhs == Fraction(1, 24) == rhs


@pytest.mark.parametrize("k", range(1, 21))
def test_convolution_half(k):
    assert check_convolution_half(k)


def test_general_convolution_degenerate_and_specialization():
    assert check_general_convolution(0, Fraction(3, 7), Fraction(-2))
    assert check_general_convolution(2, 0, Fraction(1, 2))


def test_general_convolution_grid():
    grid = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-1, 2)]
    for n, x, y in product(range(13), grid, grid):
        assert check_general_convolution(n, x, y), (n, x, y)


def test_general_convolution_detects_a_wrong_identity():
    # dropping the second term on the right must break the identity somewhere
    x, y = Fraction(0), Fraction(1, 3)
    n = 4
    lhs = sum(comb(n, j) * bernoulli_poly(j, x) * bernoulli_poly(n - j, y) for j in range(n + 1))
    assert lhs != -(n - 1) * bernoulli_poly(n, x + y)


def test_triple_convolution_k1_by_hand():
    lhs, rhs = triple_convolution_sides(1)
    assert lhs == 3 * bernoulli_half(2) == Fraction(-1, 4)
    assert rhs == -Fraction(1, 4)


@pytest.mark.parametrize("k", range(1, 13))
def test_triple_convolution(k):
    assert check_triple_convolution(k)
