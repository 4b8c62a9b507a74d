"""Half-integer order modified Bessel functions and the moment predictors.

All floating-point work uses private :class:`mpmath.MPContext` objects, one
per binary precision, so callers pass ``precision`` explicitly and nothing
touches ``mpmath.mp``.  Internal steps run with 32 guard bits; results are
rounded back to the requested precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import constants

__all__ = [
    "DEFAULT_PRECISION",
    "Prediction",
    "context",
    "y_of_n",
    "bessel_i_half",
    "bessel_i_series",
    "predict",
    "predict_unshifted",
    "check_shift_lemma",
    "scaled_remainder",
]

DEFAULT_PRECISION = 256
GUARD_BITS = 32
MAX_TWO_NU = 41
KINDS = ("crank", "rank", "diff", "partition")


@lru_cache(maxsize=None)
def context(precision: int) -> mpmath.MPContext:
    """A dedicated mpmath context fixed at ``precision`` bits."""
    if precision < 2:
        raise ValueError("precision must be at least 2 bits")
    ctx = mpmath.MPContext()
    ctx.prec = precision
    return ctx


def _check_precision(precision: int) -> None:
    if precision < 64:
        raise ValueError(f"precision must be at least 64 bits, got {precision}")


def _round(x, precision: int):
    return context(precision).mpf(x)


def _rational(ctx, r: Fraction):
    return ctx.mpf(r.numerator) / r.denominator


def y_of_n(n: int, precision: int = DEFAULT_PRECISION):
    """``(pi/6) sqrt(24n - 1)``."""
    _check_precision(precision)
    if n < 1:
        raise ValueError(f"y_n needs n >= 1, got {n}")
    ctx = context(precision + GUARD_BITS)
    return _round(ctx.pi / 6 * ctx.sqrt(24 * n - 1), precision)


def _upward_loss_bits(two_nu: int, y: float) -> int:
    # I_nu(y) >= (y/2)**nu / Gamma(nu+1) and I_{1/2}(y) < e**y bound the cancellation
    nu = two_nu / 2
    loss = (y + math.lgamma(nu + 1) - nu * math.log(y / 2)) / math.log(2)
    return max(0, math.ceil(loss))


def _check_order(two_nu: int) -> None:
    if two_nu % 2 == 0:
        raise ValueError(f"order two_nu/2 must be a half-integer, got two_nu={two_nu}")
    if abs(two_nu) > MAX_TWO_NU:
        raise ValueError(f"|two_nu| must not exceed {MAX_TWO_NU}, got {two_nu}")


def bessel_i_half(two_nu: int, y, precision: int = DEFAULT_PRECISION):
    """``I_{two_nu/2}(y)`` from the elementary closed forms and the order shift

        I_{a-1}(y) = (2a/y) I_a(y) + I_{a+1}(y).

    Negative orders are reached by running the relation downward from
    ``(I_{3/2}, I_{1/2})``, which is stable; positive orders above 3/2 run it
    upward with extra bits to absorb the cancellation.
    """
    _check_order(two_nu)
    _check_precision(precision)
    if y <= 0:
        raise ValueError("the argument must be positive")
    guard = GUARD_BITS
    if two_nu > 3:
        guard += _upward_loss_bits(two_nu, float(y))
    ctx = context(precision + guard)
    y = ctx.mpf(y)
    scale = ctx.sqrt(2 / (ctx.pi * y))
    sh, ch = ctx.sinh(y), ctx.cosh(y)
    if two_nu == -1:
        return _round(scale * ch, precision)
    i_half = scale * sh
    i_three_half = scale * (ch - sh / y)
    if two_nu == 1:
        return _round(i_half, precision)
    if two_nu == 3:
        return _round(i_three_half, precision)
    if two_nu < 0:
        upper, lower = i_three_half, i_half  # (I_{a+1}, I_a) with a = 1/2
        two_a = 1
        while two_a > two_nu:
            upper, lower = lower, two_a / y * lower + upper
            two_a -= 2
        return _round(lower, precision)
    below, current = i_half, i_three_half  # (I_{a-1}, I_a) with a = 3/2
    two_a = 3
    while two_a < two_nu:
        below, current = current, below - two_a / y * current
        two_a += 2
    return _round(current, precision)


def bessel_i_series(two_nu: int, y, precision: int = DEFAULT_PRECISION):
    """``sum_m (y/2)**(2m+nu) / (m! Gamma(m+nu+1))`` summed to full precision.

    Independent of :func:`bessel_i_half`; used as its oracle.  The working
    precision is raised until the largest term no longer swamps the sum.
    """
    if two_nu % 2 == 0:
        raise ValueError("two_nu must be odd")
    _check_precision(precision)
    if y <= 0:
        raise ValueError("the argument must be positive")
    extra = 64
    while True:
        ctx = context(precision + extra)
        nu = ctx.mpf(two_nu) / 2
        h = ctx.mpf(y) / 2
        h2 = h * h
        term = h**nu / ctx.gamma(nu + 1)
        total = term
        biggest = abs(term)
        m = 0
        while True:
            m += 1
            term = term * h2 / (m * (m + nu))
            total += term
            biggest = max(biggest, abs(term))
            if m > h and m + nu > h and abs(term) <= abs(total) * ctx.ldexp(1, -(precision + extra)):
                break
        lost = int(ctx.log(biggest / abs(total), 2)) + 1 if total else precision
        if lost + 16 <= extra:
            return _round(total, precision)
        extra = lost + 64


@dataclass(frozen=True)
class Prediction:
    n: int
    k: int
    kind: str
    term_count: int
    value: mpmath.mpf


def _validate_predict(kind: str, k: int, n: int, terms: int) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if terms not in (1, 2):
        raise ValueError("terms must be 1 or 2")
    if kind in ("diff", "partition") and terms != 1:
        raise ValueError(f"kind {kind!r} supports the one-term predictor only")
    if kind == "diff" and k < 1:
        raise ValueError("D_{2k} needs k >= 1")
    if k < 0:
        raise ValueError("k must be non-negative")
    if n < 1:
        raise ValueError("n must be at least 1")


def predict(
    kind: str, k: int, n: int, terms: int = 2, precision: int = DEFAULT_PRECISION
) -> Prediction:
    """Main-term asymptotic for ``M_{2k}``, ``N_{2k}``, ``D_{2k}`` or ``p(n)``.

    crank/rank: ``pi c (24n-1)**(k-3/4) I_{3/2}(y_n) + c~ (24n-1)**(k-5/4) I_{1/2}(y_n)``
    with ``(c, c~) = (xi, xi~)`` or ``(lambda, lambda~)``; ``terms=1`` drops the
    second summand.  diff: ``(1/2) 2k(2k-1) xi_{2k-2} (24n-1)**(k-5/4) I_{1/2}(y_n)``.
    partition: ``2 pi (24n-1)**(-3/4) I_{3/2}(y_n)``; ``k`` is ignored.
    """
    _validate_predict(kind, k, n, terms)
    _check_precision(precision)
    work = precision + GUARD_BITS
    ctx = context(work)
    y = y_of_n(n, work)
    base = ctx.mpf(24 * n - 1)
    i32 = bessel_i_half(3, y, work)
    i12 = bessel_i_half(1, y, work)
    if kind == "partition":
        value = 2 * ctx.pi * base ** ctx.mpf(-0.75) * i32
    elif kind == "diff":
        coeff = Fraction(2 * k * (2 * k - 1), 2) * constants.xi(k - 1)
        value = _rational(ctx, coeff) * base ** (ctx.mpf(k) - ctx.mpf(1.25)) * i12
    else:
        lead = constants.xi(k) if kind == "crank" else constants.lambda_(k)
        second = constants.xi_tilde(k) if kind == "crank" else constants.lambda_tilde(k)
        value = ctx.pi * _rational(ctx, lead) * base ** (ctx.mpf(k) - ctx.mpf(0.75)) * i32
        if terms == 2:
            value += _rational(ctx, second) * base ** (ctx.mpf(k) - ctx.mpf(1.25)) * i12
    return Prediction(n=n, k=k, kind=kind, term_count=terms, value=_round(value, precision))


def predict_unshifted(k: int, n: int, precision: int = DEFAULT_PRECISION):
    """Crank moment main terms at the Bessel orders the circle method produces:

        pi xi_{2k} (24n-1)**(k-3/4) I_{3/2-2k}(y_n) + xi'_{2k} (24n-1)**(k-5/4) I_{5/2-2k}(y_n).
    """
    if k < 0 or 4 * k - 3 > MAX_TWO_NU:
        raise ValueError(f"k out of range for half-integer orders down to -{MAX_TWO_NU}/2")
    _check_precision(precision)
    work = precision + GUARD_BITS
    ctx = context(work)
    y = y_of_n(n, work)
    base = ctx.mpf(24 * n - 1)
    first = ctx.pi * _rational(ctx, constants.xi(k)) * base ** (ctx.mpf(k) - ctx.mpf(0.75))
    second = _rational(ctx, constants.xi_prime(k)) * base ** (ctx.mpf(k) - ctx.mpf(1.25))
    value = first * bessel_i_half(3 - 4 * k, y, work) + second * bessel_i_half(5 - 4 * k, y, work)
    return _round(value, precision)


def check_shift_lemma(ell: int, n: int, precision: int = DEFAULT_PRECISION):
    """Residual of the two-term order shift from ``I_{3/2-2l}`` to ``I_{3/2}, I_{1/2}``.

    Returns ``|I_{3/2-2l} - I_{3/2} + (3/pi)(24n-1)**(-1/2) (2l)(2l-3) I_{1/2}|``
    divided by ``n**-1 I_{-1/2}``, all at ``y = y_n``.
    """
    if not 0 <= ell <= 10:
        raise ValueError("ell must lie in [0, 10]")
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_precision(precision)
    work = precision + GUARD_BITS
    ctx = context(work)
    y = y_of_n(n, work)
    lhs = bessel_i_half(3 - 4 * ell, y, work)
    i32 = bessel_i_half(3, y, work)
    i12 = bessel_i_half(1, y, work)
    im12 = bessel_i_half(-1, y, work)
    shift = 3 / ctx.pi / ctx.sqrt(24 * n - 1) * (2 * ell) * (2 * ell - 3) * i12
    residual = abs(lhs - (i32 - shift)) / (im12 / n)
    return _round(residual, precision)


def scaled_remainder(exact: int, predicted, k: int, n: int, precision: int = DEFAULT_PRECISION):
    """``|exact - predicted| / (n**(k-2) exp(y_n))``, the size the error term allows."""
    work = precision + GUARD_BITS
    ctx = context(work)
    y = y_of_n(n, work)
    scale = ctx.mpf(n) ** (k - 2) * ctx.exp(y)
    return _round(abs(ctx.mpf(exact) - ctx.mpf(predicted)) / scale, precision)
