"""Exact Bernoulli numbers and polynomials, and the convolution sums they obey."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_half",
    "convolution_half_sides",
    "check_convolution_half",
    "general_convolution_sides",
    "check_general_convolution",
    "triple_convolution_sides",
    "check_triple_convolution",
    "even_compositions",
    "multinomial",
]

_table: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """``B_n`` with the convention ``B_1 = -1/2``.

    Values come from ``sum_{j<=n} C(n+1, j) B_j = 0`` and are cached; the
    cache only ever grows, so concurrent readers see consistent entries.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    if n < len(_table):
        return _table[n]
    with _lock:
        for m in range(len(_table), n + 1):
            if m % 2:
                _table.append(Fraction(0))
                continue
            acc = sum(comb(m + 1, j) * _table[j] for j in range(m))
            _table.append(-acc / (m + 1))
    return _table[n]


def bernoulli_poly(n: int, x) -> Fraction:
    """``B_n(x) = sum_j C(n, j) B_j x**(n-j)`` at rational ``x``."""
    x = Fraction(x)
    return sum(
        (comb(n, j) * bernoulli_number(j) * x ** (n - j) for j in range(n + 1)),
        Fraction(0),
    )


def bernoulli_half(n: int) -> Fraction:
    """``B_n(1/2)``, which is ``(2**(1-n) - 1) B_n`` (zero for odd ``n``)."""
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    if n % 2:
        return Fraction(0)
    return (Fraction(2) ** (1 - n) - 1) * bernoulli_number(n)


def convolution_half_sides(k: int) -> tuple[Fraction, Fraction]:
    lhs = sum(
        (
            comb(2 * k - 1, 2 * j - 1)
            * bernoulli_number(2 * j)
            / (4 * j)
            * bernoulli_half(2 * k - 2 * j)
            for j in range(1, k + 1)
        ),
        Fraction(0),
    )
    return lhs, -bernoulli_half(2 * k) / 2


def check_convolution_half(k: int) -> bool:
    """``sum_j C(2k-1, 2j-1) B_2j/(4j) B_{2k-2j}(1/2) == -B_2k(1/2)/2``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lhs, rhs = convolution_half_sides(k)
    return lhs == rhs


def general_convolution_sides(n: int, x, y) -> tuple[Fraction, Fraction]:
    x, y = Fraction(x), Fraction(y)
    lhs = sum(
        (comb(n, j) * bernoulli_poly(j, x) * bernoulli_poly(n - j, y) for j in range(n + 1)),
        Fraction(0),
    )
    s = x + y
    rhs = -(n - 1) * bernoulli_poly(n, s)
    if n >= 1:
        rhs += n * (s - 1) * bernoulli_poly(n - 1, s)
    return lhs, rhs


def check_general_convolution(n: int, x, y) -> bool:
    """The two-polynomial convolution
    ``sum_j C(n,j) B_j(x) B_{n-j}(y) = -(n-1) B_n(x+y) + n(x+y-1) B_{n-1}(x+y)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    lhs, rhs = general_convolution_sides(n, x, y)
    return lhs == rhs


def even_compositions(k: int):
    """All ``(a, b, c)`` of non-negative ints with ``a + b + c == k``."""
    for a in range(k + 1):
        for b in range(k - a + 1):
            yield a, b, k - a - b


def multinomial(total: int, *parts: int) -> int:
    if sum(parts) != total:
        raise ValueError("parts must sum to the total")
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def triple_convolution_sides(k: int) -> tuple[Fraction, Fraction]:
    lhs = sum(
        (
            multinomial(2 * k, 2 * a, 2 * b, 2 * c)
            * bernoulli_half(2 * a)
            * bernoulli_half(2 * b)
            * bernoulli_half(2 * c)
            for a, b, c in even_compositions(k)
        ),
        Fraction(0),
    )
    rhs = comb(2 * k - 1, 2) * bernoulli_half(2 * k) - Fraction(
        comb(2 * k, 2), 4
    ) * bernoulli_half(2 * k - 2)
    return lhs, rhs


def check_triple_convolution(k: int) -> bool:
    """Triple sum of ``B_{2a}(1/2) B_{2b}(1/2) B_{2c}(1/2)`` over ``a+b+c = k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lhs, rhs = triple_convolution_sides(k)
    return lhs == rhs
