"""Exact rank and crank counts, their moments, and spt(n).

The crank table comes from the infinite product

    C(x; q) = prod_{n>=1} (1 - q^n) / ((1 - x q^n)(1 - x^{-1} q^n)),

the rank table from the Eulerian sum

    R(x; q) = sum_{n>=0} q^{n^2} / ((xq; q)_n (x^{-1}q; q)_n),

and the crank moment generating functions independently from the divisor-sum
recurrence.  Brute-force enumeration of partitions provides a third route for
small ``n``.  Crank data follows the generating function, so the ``n = 1``
row is ``x + x^{-1} - 1`` rather than the combinatorial ``x^{-1}``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

from .series import (
    BiSeries,
    QSeries,
    _linear_inverse_inplace,
    _zeros,
    bi_mul_series,
    divisor_series,
    partition_numbers,
    partition_series,
    pentagonal_series,
)

__all__ = [
    "MomentTable",
    "clear_caches",
    "crank_bivariate",
    "rank_bivariate",
    "partitions",
    "rank_of",
    "crank_of",
    "enumerate_oracle",
    "crank_moment_series",
    "moment_from_table",
    "crank_moments",
    "rank_moments",
    "spt",
    "spt_enumerate",
    "spt_check",
    "diff_table",
]


@dataclass(frozen=True)
class MomentTable:
    """``values[n]`` is the ``order``-th moment at ``n`` for ``0 <= n <= T``."""

    kind: str
    order: int
    values: tuple[int, ...]
    provenance: str

    @property
    def truncation(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def as_series(self) -> QSeries:
        return QSeries(self.values)


# -- bivariate generating functions --------------------------------------------

_cache_lock = threading.Lock()
_bivariate_cache: dict[str, BiSeries] = {}


def _cached(kind: str, order: int, build) -> BiSeries:
    with _cache_lock:
        hit = _bivariate_cache.get(kind)
    if hit is not None and hit.order >= order:
        return hit if hit.order == order else hit.truncate(order)
    table = build(order)
    with _cache_lock:
        current = _bivariate_cache.get(kind)
        if current is None or current.order < order:
            _bivariate_cache[kind] = table
    return table


def _build_crank(order: int) -> BiSeries:
    data = _zeros(order)
    data[0, order] = 1
    for m in range(1, order + 1):
        _linear_inverse_inplace(data, 1, m)
        _linear_inverse_inplace(data, -1, m)
    return bi_mul_series(BiSeries(data), pentagonal_series(order))


def _build_rank(order: int) -> BiSeries:
    total = _zeros(order)
    term = _zeros(order)
    term[0, order] = 1
    total += term
    j = 1
    while j * j <= order:
        shift = 2 * j - 1
        moved = _zeros(order)
        moved[shift:] = term[: order + 1 - shift]
        term = moved
        _linear_inverse_inplace(term, 1, j)
        _linear_inverse_inplace(term, -1, j)
        total += term
        j += 1
    return BiSeries(total)


def clear_caches() -> None:
    """Drop every memoized table, e.g. before timing a cold computation."""
    with _cache_lock:
        _bivariate_cache.clear()
    _crank_moment_cached.cache_clear()


def crank_bivariate(order: int) -> BiSeries:
    """Table of ``M(m, n)`` for ``n <= order`` from the product formula."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    return _cached("crank", order, _build_crank)


def rank_bivariate(order: int) -> BiSeries:
    """Table of ``N(m, n)`` for ``n <= order`` from the Eulerian series."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    return _cached("rank", order, _build_rank)


# -- brute force ------------------------------------------------------------------


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        # peel off the trailing ones, then decrement the last part > 1
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        largest = parts.pop() - 1
        remainder = ones + 1
        parts.append(largest)
        while remainder > largest:
            parts.append(largest)
            remainder -= largest
        if remainder:
            parts.append(remainder)


def rank_of(parts: tuple[int, ...]) -> int:
    """Dyson's rank: largest part minus number of parts."""
    if not parts:
        return 0
    return parts[0] - len(parts)


def crank_of(parts: tuple[int, ...]) -> int:
    """Andrews-Garvan crank of a non-increasing partition."""
    ones = parts.count(1)
    if ones == 0:
        return parts[0] if parts else 0
    return sum(1 for p in parts if p > ones) - ones


def enumerate_oracle(n_max: int) -> tuple[BiSeries, BiSeries]:
    """Crank and rank tables by listing every partition of every ``n <= n_max``.

    The crank row at ``n = 1`` is replaced by the generating-function row
    ``{-1: 1, 0: -1, 1: 1}``.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    crank_rows: list[dict[int, int]] = []
    rank_rows: list[dict[int, int]] = []
    for n in range(n_max + 1):
        cr: dict[int, int] = {}
        rk: dict[int, int] = {}
        for lam in partitions(n):
            c = crank_of(lam)
            r = rank_of(lam)
            cr[c] = cr.get(c, 0) + 1
            rk[r] = rk.get(r, 0) + 1
        if n == 1:
            cr = {-1: 1, 0: -1, 1: 1}
        crank_rows.append(cr)
        rank_rows.append(rk)
    return BiSeries.from_rows(crank_rows), BiSeries.from_rows(rank_rows)


# -- moments -------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _crank_moment_cached(k: int, order: int) -> QSeries:
    if k == 0:
        return partition_series(order)
    total = QSeries([0] * (order + 1))
    for j in range(1, k + 1):
        phi = divisor_series(2 * j - 1, order)
        total = total + phi * _crank_moment_cached(k - j, order) * comb(2 * k - 1, 2 * j - 1)
    return total * 2


def crank_moment_series(k: int, order: int) -> QSeries:
    """``C_{2k}(q) = sum M_{2k}(n) q^n`` from the divisor-sum recurrence alone."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    return _crank_moment_cached(k, order)


def moment_from_table(
    table: BiSeries, order: int, kind: str = "crank", use_symmetry: bool = True
) -> MomentTable:
    """``sum_m m**order c(m, n)`` for every row of ``table``.

    With ``use_symmetry`` the sum folds to ``2 sum_{m>0}`` for even orders and
    is zero for odd ones.  Without it every signed term is summed, which is
    what the odd-moment checks rely on.
    """
    if order < 0:
        raise ValueError("moment order must be non-negative")
    t = table.order
    data = table.data
    if use_symmetry:
        if order % 2:
            values = (0,) * (t + 1)
        elif order == 0:
            values = tuple(table.row_sums())
        else:
            weights = np.array([m**order for m in range(1, t + 1)], dtype=object)
            values = tuple(int(2 * v) for v in data[:, t + 1 :].dot(weights)) if t else (0,)
    else:
        weights = np.array([m**order for m in range(-t, t + 1)], dtype=object)
        values = tuple(int(v) for v in data.dot(weights))
    return MomentTable(kind=kind, order=order, values=values, provenance="bivariate")


def crank_moments(k: int, order: int, route: str = "recurrence") -> MomentTable:
    """``M_{2k}(n)`` for ``n <= order`` via ``route`` in {recurrence, bivariate, oracle}."""
    if route == "recurrence":
        values = tuple(crank_moment_series(k, order).integers())
        return MomentTable("crank", 2 * k, values, "recurrence")
    if route == "bivariate":
        return moment_from_table(crank_bivariate(order), 2 * k, "crank")
    if route == "oracle":
        table = moment_from_table(enumerate_oracle(order)[0], 2 * k, "crank")
        return MomentTable("crank", 2 * k, table.values, "oracle")
    raise ValueError(f"unknown route {route!r}")


def rank_moments(k: int, order: int, route: str = "bivariate") -> MomentTable:
    """``N_{2k}(n)`` for ``n <= order`` via ``route`` in {bivariate, oracle}."""
    if route == "bivariate":
        return moment_from_table(rank_bivariate(order), 2 * k, "rank")
    if route == "oracle":
        table = moment_from_table(enumerate_oracle(order)[1], 2 * k, "rank")
        return MomentTable("rank", 2 * k, table.values, "oracle")
    raise ValueError(f"unknown route {route!r}")


def diff_table(k: int, order: int) -> MomentTable:
    """``D_{2k}(n) = M_{2k}(n) - N_{2k}(n)``; crank side by recurrence, rank side bivariate."""
    if k < 1:
        raise ValueError("D_{2k} is defined for k >= 1")
    crank = crank_moments(k, order)
    rank = rank_moments(k, order)
    values = tuple(a - b for a, b in zip(crank.values, rank.values))
    return MomentTable("diff", 2 * k, values, "recurrence-bivariate")


# -- smallest parts -----------------------------------------------------------------


def spt_enumerate(n: int) -> int:
    """Total number of smallest parts over all partitions of ``n``."""
    if n < 1:
        raise ValueError("spt is defined for n >= 1")
    return sum(lam.count(lam[-1]) for lam in partitions(n))


def spt(n: int) -> int:
    """``spt(n) = n p(n) - N_2(n) / 2`` with ``N_2`` from the rank table."""
    if n < 1:
        raise ValueError("spt is defined for n >= 1")
    n2 = rank_moments(1, n)[n]
    p = partition_numbers(n)[n]
    if n2 % 2:
        raise ArithmeticError(f"N_2({n}) = {n2} is odd")
    return n * p - n2 // 2


def spt_check(order: int, enumerate_up_to: int = 40) -> bool:
    """Compare the rank-moment formula for spt with enumeration for ``n <= min(order, 40)``."""
    top = min(order, enumerate_up_to)
    if top < 1:
        return True
    n2 = rank_moments(1, top)
    p = partition_numbers(top)
    return all(n * p[n] - n2[n] // 2 == spt_enumerate(n) and n2[n] % 2 == 0 for n in range(1, top + 1))
