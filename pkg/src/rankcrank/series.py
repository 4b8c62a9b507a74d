"""Truncated power series with exact coefficients.

Two containers live here:

* :class:`QSeries` -- a univariate series in ``q`` known modulo ``q**(T+1)``,
  with :class:`fractions.Fraction` coefficients.
* :class:`BiSeries` -- a series in ``q`` whose ``q**n`` coefficient is an
  integer Laurent polynomial in ``x`` supported on ``-n <= m <= n``.

Products of univariate series are done on integer numerators packed into a
single big integer (Kronecker substitution), which keeps exact arithmetic
fast enough for truncation orders in the low thousands.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .bernoulli import bernoulli_number

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "QSeries",
    "BiSeries",
    "series_mul",
    "series_inverse",
    "pentagonal_series",
    "partition_series",
    "partition_numbers",
    "delta_q",
    "divisor_series",
    "eisenstein_series",
    "bi_mul_linear_inverse",
    "bi_mul_linear",
    "bi_mul_series",
]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class QSeries:
    """Immutable truncated series ``sum_{n<=T} a_n q**n`` over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a QSeries needs at least the constant coefficient")
        self._coeffs = coeffs

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff=1) -> "QSeries":
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = [0] * (order + 1)
        if degree <= order:
            coeffs[degree] = coeff
        return cls(coeffs)

    @property
    def order(self) -> int:
        """Truncation order ``T``; the series is known modulo ``q**(T+1)``."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if len(self._coeffs) > 6 else ""
        return f"QSeries([{shown}{tail}], order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, QSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return QSeries(self._coeffs[: order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def integers(self) -> list[int]:
        """Coefficients as Python ints; raises if any coefficient is fractional."""
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [c.numerator for c in self._coeffs]

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return QSeries(a + b for a, b in zip(self._coeffs[: t + 1], other._coeffs[: t + 1]))

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return QSeries(a - b for a, b in zip(self._coeffs[: t + 1], other._coeffs[: t + 1]))

    def __neg__(self) -> "QSeries":
        return QSeries(-c for c in self._coeffs)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return QSeries(c * a for a in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__


# -- exact integer convolution ---------------------------------------------


def _pack(values: Sequence[int], width: int) -> int:
    pos = b"".join((v if v > 0 else 0).to_bytes(width, "little") for v in values)
    neg = b"".join((-v if v < 0 else 0).to_bytes(width, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def convolve_ints(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    """First ``length`` coefficients of the product of two integer sequences."""
    a = list(a[:length])
    b = list(b[:length])
    if not a or not b:
        return [0] * length
    amax = max(abs(v) for v in a)
    bmax = max(abs(v) for v in b)
    if amax == 0 or bmax == 0:
        return [0] * length
    # one spare bit for the sign, one for the bias added during unpacking
    bits = amax.bit_length() + bmax.bit_length() + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    prod = _pack(a, width) * _pack(b, width)
    ndigits = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * ndigits, "little")
    raw = (prod + bias).to_bytes(width * ndigits, "little")
    out = [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") - half
        for i in range(min(ndigits, length))
    ]
    out.extend([0] * (length - len(out)))
    return out


def _numerators(s: QSeries) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in s.coeffs))
    return [c.numerator * (den // c.denominator) for c in s.coeffs], den


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Product of two series, truncated at the smaller of the two orders."""
    t = min(a.order, b.order)
    an, ad = _numerators(a)
    bn, bd = _numerators(b)
    prod = convolve_ints(an, bn, t + 1)
    den = ad * bd
    if den == 1:
        return QSeries(prod)
    return QSeries(Fraction(c, den) for c in prod)


def series_inverse(a: QSeries) -> QSeries:
    """Multiplicative inverse by Newton iteration ``b <- b + b(1 - a b)``."""
    if a[0] == 0:
        raise ValueError("series with zero constant term has no inverse")
    t = a.order
    b = QSeries([1 / a[0]])
    prec = 0
    while prec < t:
        prec = min(2 * prec + 1, t)
        a_cut = a.truncate(prec)
        b_ext = QSeries(list(b.coeffs) + [0] * (prec - b.order))
        err = QSeries.one(prec) - series_mul(a_cut, b_ext)
        b = b_ext + series_mul(b_ext, err)
    return b


# -- named series ------------------------------------------------------------


def pentagonal_series(order: int) -> QSeries:
    """``prod_{n>=1} (1 - q**n)`` via Euler's pentagonal number theorem."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    j = 1
    while j * (3 * j - 1) // 2 <= order:
        sign = -1 if j % 2 else 1
        for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if g <= order:
                coeffs[g] += sign
        j += 1
    return QSeries(coeffs)


def partition_numbers(order: int) -> list[int]:
    """``p(0), ..., p(order)`` as ints.

    Inverts the pentagonal series with its sparse recurrence, which costs
    O(T**1.5) integer additions.
    """
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    gens: list[tuple[int, int]] = []
    j = 1
    while j * (3 * j - 1) // 2 <= order:
        sign = 1 if j % 2 else -1
        gens.append((j * (3 * j - 1) // 2, sign))
        gens.append((j * (3 * j + 1) // 2, sign))
        j += 1
    p = [0] * (order + 1)
    p[0] = 1
    for n in range(1, order + 1):
        total = 0
        for g, sign in gens:
            if g > n:
                break
            total += sign * p[n - g]
        p[n] = total
    return p


def partition_series(order: int) -> QSeries:
    """``P(q) = sum p(n) q**n`` to the given order."""
    return QSeries(partition_numbers(order))


def delta_q(a: QSeries) -> QSeries:
    """The operator ``q d/dq``: multiplies the ``q**n`` coefficient by ``n``."""
    return QSeries(n * c for n, c in enumerate(a.coeffs))


def divisor_series(j: int, order: int) -> QSeries:
    """``sum_{n>=1} sigma_j(n) q**n`` computed with a divisor sieve."""
    if j < 0:
        raise ValueError("divisor power must be non-negative")
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    sigma = [0] * (order + 1)
    for d in range(1, order + 1):
        dj = d**j
        for m in range(d, order + 1, d):
            sigma[m] += dj
    return QSeries(sigma)


def eisenstein_series(k: int, order: int) -> QSeries:
    """``E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q**n`` for even ``k >= 2``."""
    if k < 2 or k % 2:
        raise ValueError(f"Eisenstein series needs an even weight k >= 2, got {k}")
    scale = Fraction(-2 * k) / bernoulli_number(k)
    phi = divisor_series(k - 1, order)
    return QSeries.one(order) + phi * scale


# -- bivariate series ---------------------------------------------------------


class BiSeries:
    """Series in ``q`` whose ``q**n`` coefficient is a Laurent polynomial in ``x``.

    Stored as a read-only ``(T+1, 2T+1)`` object array of Python ints where
    entry ``[n, T + m]`` is the coefficient of ``x**m q**n``.  Only
    ``|m| <= n`` may be nonzero.
    """

    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray):
        data = np.asarray(data, dtype=object)
        if data.ndim != 2 or data.shape[1] != 2 * data.shape[0] - 1:
            raise ValueError("BiSeries data must have shape (T+1, 2T+1)")
        t = data.shape[0] - 1
        for n in range(t + 1):
            row = data[n]
            if any(row[: t - n]) or any(row[t + n + 1 :]):
                raise ValueError(f"row {n} has x-degree exceeding {n}")
        data = data.copy()
        data.flags.writeable = False
        self._data = data

    @classmethod
    def zeros(cls, order: int) -> "BiSeries":
        return cls(_zeros(order))

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        data = _zeros(order)
        data[0, order] = 1
        return cls(data)

    @classmethod
    def from_rows(cls, rows: Sequence[dict[int, int]]) -> "BiSeries":
        """Build from per-``n`` mappings ``{m: coefficient}``."""
        t = len(rows) - 1
        data = _zeros(t)
        for n, row in enumerate(rows):
            for m, c in row.items():
                if abs(m) > n:
                    raise ValueError(f"x**{m} cannot appear in the q**{n} coefficient")
                data[n, t + m] = c
        return cls(data)

    @property
    def order(self) -> int:
        return self._data.shape[0] - 1

    @property
    def data(self) -> np.ndarray:
        return self._data

    def coeff(self, m: int, n: int) -> int:
        if abs(m) > n:
            return 0
        return self._data[n, self.order + m]

    def row(self, n: int) -> dict[int, int]:
        """Nonzero coefficients of the ``q**n`` row as ``{m: c}``."""
        t = self.order
        return {m: int(self._data[n, t + m]) for m in range(-n, n + 1) if self._data[n, t + m]}

    def half_row(self, n: int) -> list[int]:
        """``[c(0, n), c(1, n), ..., c(n, n)]``."""
        t = self.order
        return [int(c) for c in self._data[n, t : t + n + 1]]

    def row_sums(self) -> list[int]:
        return [int(sum(r)) for r in self._data]

    def is_symmetric(self) -> bool:
        return all(
            np.array_equal(r, r[::-1]) for r in self._data
        )

    def truncate(self, order: int) -> "BiSeries":
        t = self.order
        if order > t:
            raise ValueError(f"cannot extend a series known to order {t} to {order}")
        return BiSeries(self._data[: order + 1, t - order : t + order + 1])

    def __eq__(self, other) -> bool:
        if isinstance(other, BiSeries):
            return self._data.shape == other._data.shape and bool(
                np.all(self._data == other._data)
            )
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"BiSeries(order={self.order})"


def _zeros(order: int) -> np.ndarray:
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    data = np.empty((order + 1, 2 * order + 1), dtype=object)
    data.fill(0)
    return data


def _linear_inverse_inplace(data: np.ndarray, s: int, m: int) -> None:
    # b[n] = a[n] + x**s * b[n-m], run upward so b[n-m] is already final
    t = data.shape[0] - 1
    for n in range(m, t + 1):
        src = n - m
        lo, hi = t - src, t + src + 1
        if s == 1:
            data[n, lo + 1 : hi + 1] += data[src, lo:hi]
        else:
            data[n, lo - 1 : hi - 1] += data[src, lo:hi]


def _linear_inplace(data: np.ndarray, s: int, m: int) -> None:
    # b[n] = a[n] - x**s * a[n-m], run downward so a[n-m] is still original
    t = data.shape[0] - 1
    for n in range(t, m - 1, -1):
        src = n - m
        lo, hi = t - src, t + src + 1
        if s == 1:
            data[n, lo + 1 : hi + 1] -= data[src, lo:hi]
        else:
            data[n, lo - 1 : hi - 1] -= data[src, lo:hi]


def _check_factor(s: int, m: int) -> None:
    if s not in (1, -1):
        raise ValueError(f"x exponent must be +1 or -1, got {s}")
    if m < 1:
        raise ValueError(f"q exponent must be positive, got {m}")


def bi_mul_linear_inverse(a: BiSeries, s: int, m: int) -> BiSeries:
    """``a / (1 - x**s q**m)``, expanded as a geometric series in ``x**s q**m``."""
    _check_factor(s, m)
    data = a.data.copy()
    _linear_inverse_inplace(data, s, m)
    return BiSeries(data)


def bi_mul_linear(a: BiSeries, s: int, m: int) -> BiSeries:
    """``a * (1 - x**s q**m)``."""
    _check_factor(s, m)
    data = a.data.copy()
    _linear_inplace(data, s, m)
    return BiSeries(data)


def bi_mul_series(a: BiSeries, f: QSeries) -> BiSeries:
    """Multiply by an integral univariate series ``f(q)``, skipping its zero terms."""
    t = min(a.order, f.order)
    src = a.data[: t + 1, a.order - t : a.order + t + 1]
    terms = [(j, c) for j, c in enumerate(f.integers()[: t + 1]) if c]
    out = _zeros(t)
    for j, c in terms:
        out[j:] += c * src[: t + 1 - j]
    return BiSeries(out)

