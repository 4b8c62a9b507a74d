"""Asymptotic constants for rank and crank moments.

Each constant is available in closed form (Bernoulli polynomials at 1/2) and
through the recurrence that produces it, so the two can be compared exactly.
Indices are moment *halves*: ``xi(k)`` is the constant attached to ``M_{2k}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .bernoulli import bernoulli_half, bernoulli_number, even_compositions, multinomial

__all__ = [
    "ConstantSet",
    "TripleConstantSet",
    "xi",
    "xi_prime",
    "xi_tilde",
    "lambda_",
    "lambda_tilde",
    "xi_via_recurrence",
    "xi_prime_via_recurrence",
    "xi_triple",
    "xi_triple_prime",
    "xi_triple_tilde",
    "xi_triple_via_recurrence",
    "xi_triple_prime_via_recurrence",
    "alpha",
    "beta_coeff",
    "check_xi_prime_identity",
    "leading_order_sides",
    "second_order_sides",
    "check_leading_order_matching",
    "constant_set",
    "triple_constant_set",
]


def _check_index(k: int) -> None:
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")


# -- closed forms ---------------------------------------------------------------


def xi(k: int) -> Fraction:
    """``(-1)**k * 2 * B_{2k}(1/2)``; positive for every ``k``."""
    _check_index(k)
    return (-1) ** k * 2 * bernoulli_half(2 * k)


def xi_prime(k: int) -> Fraction:
    _check_index(k)
    if k == 0:
        return Fraction(0)
    return -Fraction(2 * k * (2 * k - 1), 4) * xi(k - 1)


def xi_tilde(k: int) -> Fraction:
    """Coefficient of the ``I_{1/2}`` term in the crank moment expansion."""
    _check_index(k)
    return -3 * (2 * k) * (2 * k - 3) * xi(k) + xi_prime(k)


def lambda_(k: int) -> Fraction:
    """Leading rank constant; equal to :func:`xi`."""
    return xi(k)


def lambda_tilde(k: int) -> Fraction:
    """Coefficient of the ``I_{1/2}`` term in the rank moment expansion."""
    _check_index(k)
    if k == 0:
        return Fraction(0)
    return -3 * (2 * k) * (2 * k - 3) * xi(k) - Fraction(3 * 2 * k * (2 * k - 1), 4) * xi(k - 1)


def alpha(k: int) -> Fraction:
    """``(-24)**k B_{2k}(1/2)``, so that ``M_{2k}(n) ~ alpha(k) n**k p(n)``."""
    _check_index(k)
    return Fraction(-24) ** k * bernoulli_half(2 * k)


def beta_coeff(k: int) -> Fraction:
    """Rational factor ``b`` in ``beta_{2k} = b * sqrt(6) / pi``."""
    if k < 1:
        raise ValueError("beta is defined for k >= 1")
    return 2 * k * (2 * k - 1) * Fraction(-24) ** (k - 1) * bernoulli_half(2 * k - 2)


# -- single-index recurrences ----------------------------------------------------


def _weight(k: int, j: int) -> Fraction:
    # C(2k-1, 2j-1) * B_2j / (4j) * (-1)**(j+1), the kernel shared by every recurrence
    return comb(2 * k - 1, 2 * j - 1) * bernoulli_number(2 * j) / (4 * j) * (-1) ** (j + 1)


def _recurrence_sum(k: int, values: Callable[[int], Fraction], upper: int) -> Fraction:
    return 2 * sum((_weight(k, j) * values(k - j) for j in range(1, upper + 1)), Fraction(0))


@lru_cache(maxsize=None)
def xi_via_recurrence(k: int) -> Fraction:
    _check_index(k)
    if k == 0:
        return Fraction(2)
    return _recurrence_sum(k, xi_via_recurrence, k)


@lru_cache(maxsize=None)
def xi_prime_via_recurrence(k: int) -> Fraction:
    _check_index(k)
    if k == 0:
        return Fraction(0)
    return _recurrence_sum(k, xi_prime_via_recurrence, k - 1) - Fraction(
        2 * k - 1, 2
    ) * xi_via_recurrence(k - 1)


def check_xi_prime_identity(k: int) -> bool:
    """The partial recurrence sum for ``xi'`` equals ``(1 - 1/k) xi'_{2k}``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _recurrence_sum(k, xi_prime, k - 1) == (1 - Fraction(1, k)) * xi_prime(k)


# -- triple products --------------------------------------------------------------


def xi_triple(a: int, b: int, c: int) -> Fraction:
    for i in (a, b, c):
        _check_index(i)
    return xi(a) * xi(b) * xi(c) / 4


def xi_triple_prime(a: int, b: int, c: int) -> Fraction:
    for i in (a, b, c):
        _check_index(i)
    return (
        xi_prime(a) * xi(b) * xi(c) + xi(a) * xi_prime(b) * xi(c) + xi(a) * xi(b) * xi_prime(c)
    ) / 4


def xi_triple_tilde(a: int, b: int, c: int) -> Fraction:
    k = a + b + c
    return -3 * (2 * k) * (2 * k - 3) * xi_triple(a, b, c) + xi_triple_prime(a, b, c)


def _shifted_sum(idx: tuple[int, int, int], values: Callable[..., Fraction]) -> Fraction:
    """Apply the single-index kernel to every positive coordinate at once.

    Zero coordinates are carried through unchanged; with all three positive
    this is ``-8 sum C C C (B/4j)(B/4i)(B/4l) (-1)**(i+j+l) f(shifted)``.
    """
    ranges = [range(1, i + 1) if i > 0 else (0,) for i in idx]
    total = Fraction(0)
    for j in ranges[0]:
        for i in ranges[1]:
            for l in ranges[2]:
                w = Fraction(1)
                for n, s in zip(idx, (j, i, l)):
                    if n > 0:
                        w *= 2 * _weight(n, s)
                total += w * values(idx[0] - j, idx[1] - i, idx[2] - l)
    return total


@lru_cache(maxsize=None)
def xi_triple_via_recurrence(a: int, b: int, c: int) -> Fraction:
    for i in (a, b, c):
        _check_index(i)
    if a == b == c == 0:
        x0 = xi_via_recurrence(0)
        return x0 * x0 * x0 / 4
    return _shifted_sum((a, b, c), xi_triple_via_recurrence)


@lru_cache(maxsize=None)
def xi_triple_prime_via_recurrence(a: int, b: int, c: int) -> Fraction:
    for i in (a, b, c):
        _check_index(i)
    if a == b == c == 0:
        return Fraction(0)
    single = (xi_via_recurrence(a), xi_via_recurrence(b), xi_via_recurrence(c))
    primed = (
        xi_prime_via_recurrence(a),
        xi_prime_via_recurrence(b),
        xi_prime_via_recurrence(c),
    )
    total = _shifted_sum((a, b, c), xi_triple_prime_via_recurrence)
    for pos, n in enumerate((a, b, c)):
        if n == 0:
            continue
        term = Fraction(1, 4 * n)
        for q in range(3):
            term *= primed[q] if q == pos else single[q]
        total += term
    return total


# -- matching identities from the rank-crank PDE -----------------------------------


def leading_order_sides(k: int) -> tuple[Fraction, Fraction]:
    lhs = sum(
        (multinomial(2 * k, 2 * a, 2 * b, 2 * c) * xi_triple(a, b, c) for a, b, c in even_compositions(k)),
        Fraction(0),
    )
    rhs = comb(2 * k - 1, 2) * xi(k) + Fraction(comb(2 * k, 2), 4) * xi(k - 1)
    return lhs, rhs


def second_order_sides(k: int) -> tuple[Fraction, Fraction]:
    lhs = sum(
        (
            multinomial(2 * k, 2 * a, 2 * b, 2 * c) * xi_triple_tilde(a, b, c)
            for a, b, c in even_compositions(k)
        ),
        Fraction(0),
    )
    rhs = comb(2 * k - 1, 2) * lambda_tilde(k) + Fraction(comb(2 * k, 2), 4) * lambda_tilde(k - 1)
    return lhs, rhs


def check_leading_order_matching(k: int) -> bool:
    """Main and second-order terms of the rank-crank PDE balance at index ``k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lhs1, rhs1 = leading_order_sides(k)
    lhs2, rhs2 = second_order_sides(k)
    return lhs1 == rhs1 and lhs2 == rhs2


# -- bundles ------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantSet:
    k: int
    xi: Fraction
    xi_prime: Fraction
    xi_tilde: Fraction
    lambda_: Fraction
    lambda_tilde: Fraction
    alpha: Fraction
    beta_coeff: Fraction | None  # undefined at k = 0

    def as_strings(self) -> dict[str, object]:
        """Field name to rational string, the form used by the CLI's JSON output."""
        return {
            "k": self.k,
            "xi": str(self.xi),
            "xi_prime": str(self.xi_prime),
            "xi_tilde": str(self.xi_tilde),
            "lambda": str(self.lambda_),
            "lambda_tilde": str(self.lambda_tilde),
            "alpha": str(self.alpha),
            "beta_coeff": None if self.beta_coeff is None else str(self.beta_coeff),
        }


@dataclass(frozen=True)
class TripleConstantSet:
    indices: tuple[int, int, int]
    xi3: Fraction
    xi3_prime: Fraction
    xi3_tilde: Fraction


def constant_set(k: int) -> ConstantSet:
    return ConstantSet(
        k=k,
        xi=xi(k),
        xi_prime=xi_prime(k),
        xi_tilde=xi_tilde(k),
        lambda_=lambda_(k),
        lambda_tilde=lambda_tilde(k),
        alpha=alpha(k),
        beta_coeff=beta_coeff(k) if k >= 1 else None,
    )


def triple_constant_set(a: int, b: int, c: int) -> TripleConstantSet:
    return TripleConstantSet(
        indices=(a, b, c),
        xi3=xi_triple(a, b, c),
        xi3_prime=xi_triple_prime(a, b, c),
        xi3_tilde=xi_triple_tilde(a, b, c),
    )
