"""Verification harness: exact identities, the rank-crank PDE, Garvan's
inequality, and convergence of the Bessel-function predictors.

Every check returns a :class:`VerdictReport`.  Exact checks compare integers
or rationals; asymptotic checks use trend and boundedness criteria with a
factor-2 slack, since only O-bounds are available for the error terms.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Sequence

import mpmath

from . import bernoulli, constants
from .bessel import DEFAULT_PRECISION, context, predict, scaled_remainder
from .moments import (
    crank_bivariate,
    crank_moment_series,
    crank_moments,
    diff_table,
    moment_from_table,
    rank_bivariate,
    rank_moments,
    spt_enumerate,
)
from .series import QSeries, delta_q, partition_numbers, pentagonal_series, series_mul

__all__ = [
    "Witness",
    "VerdictReport",
    "format_float",
    "combine",
    "pde_sides",
    "verify_pde",
    "verify_inequality",
    "convergence_report",
    "verify_exact_identities",
    "verify_constants",
    "DEFAULT_N_LIST",
]

DEFAULT_N_LIST = (100, 200, 400)
MAX_WITNESSES = 20


def format_float(x, precision: int = DEFAULT_PRECISION) -> str:
    """Scientific notation with as many digits as ``precision`` bits carry."""
    digits = max(1, int(precision * math.log10(2)))
    return mpmath.nstr(x, digits, min_fixed=0, max_fixed=0)


def _jsonable(value, precision: int):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if hasattr(value, "_mpf_"):
        return format_float(value, precision)
    if isinstance(value, float):
        return format_float(mpmath.mpf(value), 53)
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, precision) for v in value]
    return str(value)


@dataclass(frozen=True)
class Witness:
    location: str
    expected: object
    actual: object


@dataclass
class VerdictReport:
    check_name: str
    parameters: dict
    status: str
    witnesses: list[Witness] = field(default_factory=list)
    metrics: list[dict] | None = None
    notes: list[str] = field(default_factory=list)
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', got {self.status!r}")
        if self.status == "fail" and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {
            "check_name": self.check_name,
            "parameters": _jsonable(self.parameters, self.precision),
            "status": self.status,
            "witnesses": [
                {
                    "location": w.location,
                    "expected": _jsonable(w.expected, self.precision),
                    "actual": _jsonable(w.actual, self.precision),
                }
                for w in self.witnesses
            ],
        }
        if self.metrics is not None:
            out["metrics"] = _jsonable(self.metrics, self.precision)
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), allow_nan=False, **kwargs)


def _report(name: str, params: dict, witnesses: list[Witness], **extra) -> VerdictReport:
    status = "fail" if witnesses else "pass"
    return VerdictReport(name, params, status, witnesses[:MAX_WITNESSES], **extra)


def combine(name: str, reports: Sequence[VerdictReport], params: dict | None = None) -> VerdictReport:
    """Merge several reports; fails if any part fails."""
    witnesses = [
        Witness(f"{r.check_name}: {w.location}", w.expected, w.actual)
        for r in reports
        for w in r.witnesses
    ]
    notes = [f"{r.check_name}: {note}" for r in reports for note in r.notes]
    metrics = [row for r in reports for row in (r.metrics or [])] or None
    return _report(name, params or {}, witnesses, metrics=metrics, notes=notes)


# -- rank-crank PDE ---------------------------------------------------------------


def pde_sides(
    k: int,
    crank: Callable[[int], QSeries],
    rank: Callable[[int], QSeries],
    order: int,
) -> tuple[QSeries, QSeries]:
    """Both sides of the Atkin-Garvan rank-crank PDE at moment order ``2k``.

    ``crank(j)`` and ``rank(j)`` return ``C_{2j}`` and ``R_{2j}`` to ``order``.
    """
    inv_p = pentagonal_series(order)
    inv_p2 = series_mul(inv_p, inv_p)
    zero = QSeries([0] * (order + 1))
    lhs = zero
    for i in range(k):
        s = k - i
        inner = zero
        for a, b, c in bernoulli.even_compositions(s):
            weight = bernoulli.multinomial(2 * s, 2 * a, 2 * b, 2 * c)
            inner = inner + crank(a) * crank(b) * crank(c) * weight
        lhs = lhs + inner * inv_p2 * comb(2 * k, 2 * i)
    lhs = lhs - crank(1) * (3 * (2 ** (2 * k - 1) - 1))

    rhs = rank(k) * Fraction((2 * k - 1) * (2 * k - 2), 2)
    for i in range(1, k):
        rhs = rhs + delta_q(rank(k - i)) * (6 * comb(2 * k, 2 * i) * (2 ** (2 * i - 1) - 1))
        weight = (
            comb(2 * k, 2 * i + 2) * (2 ** (2 * i + 1) - 1)
            - 2 ** (2 * i) * comb(2 * k, 2 * i + 1)
            + comb(2 * k, 2 * i)
        )
        rhs = rhs + rank(k - i) * weight
    return lhs, rhs


def verify_pde(
    k: int,
    order: int,
    rank_override: Mapping[int, QSeries] | None = None,
) -> VerdictReport:
    """Check the rank-crank PDE coefficientwise up to ``q**order``.

    Crank series come from the divisor-sum recurrence, rank series from the
    Eulerian bivariate expansion.  ``rank_override`` replaces individual
    ``R_{2j}`` (used for fault injection).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    rank_override = dict(rank_override or {})

    def crank(j: int) -> QSeries:
        return crank_moment_series(j, order)

    def rank(j: int) -> QSeries:
        if j in rank_override:
            return rank_override[j].truncate(order)
        return rank_moments(j, order).as_series()

    lhs, rhs = pde_sides(k, crank, rank, order)
    witnesses = [
        Witness(f"q^{n}", a, b) for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)) if a != b
    ]
    return _report("pde", {"k": k, "n_max": order}, witnesses)


# -- Garvan's inequality ----------------------------------------------------------


def verify_inequality(k_max: int, order: int) -> VerdictReport:
    """``M_{2k}(n) > N_{2k}(n)`` for ``2 <= n <= order`` and ``1 <= k <= k_max``."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    witnesses = []
    notes = []
    for k in range(1, k_max + 1):
        crank = crank_moments(k, order)
        rank = rank_moments(k, order)
        if order >= 1:
            notes.append(f"k={k}, n=1: M={crank[1]}, N={rank[1]} (not gated)")
        for n in range(2, order + 1):
            if crank[n] <= rank[n]:
                witnesses.append(Witness(f"k={k}, n={n}", f"M > {rank[n]}", crank[n]))
    return _report("inequality", {"k_max": k_max, "n_max": order}, witnesses, notes=notes)


# -- convergence of the predictors --------------------------------------------------


def _exact_values(kind: str, k: int, order: int):
    if kind == "crank":
        return crank_moments(k, order)
    if kind == "rank":
        return rank_moments(k, order)
    if kind == "diff":
        return diff_table(k, order)
    if kind == "partition":
        return partition_numbers(order)
    raise ValueError(f"unknown kind {kind!r}")


def convergence_report(
    kind: str,
    k: int,
    n_list: Sequence[int] = DEFAULT_N_LIST,
    precision: int = DEFAULT_PRECISION,
) -> VerdictReport:
    """Exact values against the one- and two-term predictors along ``n_list``.

    Passes when the relative error of the best available predictor strictly
    decreases along ``n_list`` and the scaled remainder
    ``|exact - pred| / (n**(k-2) e**y_n)`` never grows by more than a factor
    of 2 between consecutive entries.
    """
    n_list = list(n_list)
    if not n_list or any(n < 1 for n in n_list):
        raise ValueError("n_list needs positive entries")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be strictly increasing")
    exact = _exact_values(kind, k, max(n_list))
    ctx = context(precision)
    two_terms = kind in ("crank", "rank")
    rows = []
    for n in n_list:
        ex = exact[n]
        pred1 = predict(kind, k, n, 1, precision).value
        pred2 = predict(kind, k, n, 2, precision).value if two_terms else None
        best = pred2 if two_terms else pred1
        rel = abs(ctx.mpf(ex) - best) / abs(ctx.mpf(ex)) if ex else ctx.inf
        rows.append(
            {
                "n": n,
                "exact": ex,
                "pred1": pred1,
                "pred2": pred2,
                "rel_err": rel,
                "ratio": ctx.mpf(ex) / best,
                "scaled_remainder": scaled_remainder(ex, best, k, n, precision),
            }
        )
    witnesses = []
    for prev, cur in zip(rows, rows[1:]):
        if not cur["rel_err"] < prev["rel_err"]:
            witnesses.append(
                Witness(f"rel_err n={prev['n']}->{cur['n']}", "decreasing", (prev["rel_err"], cur["rel_err"]))
            )
        if cur["scaled_remainder"] > 2 * prev["scaled_remainder"]:
            witnesses.append(
                Witness(
                    f"scaled_remainder n={prev['n']}->{cur['n']}",
                    "growth <= 2x",
                    (prev["scaled_remainder"], cur["scaled_remainder"]),
                )
            )
    params = {"kind": kind, "k": k, "n_list": n_list, "precision_bits": precision}
    return _report("convergence", params, witnesses, metrics=rows, precision=precision)


# -- exact identities ------------------------------------------------------------------

RAMANUJAN = ((5, 4), (7, 5), (11, 6))


def verify_exact_identities(
    order: int = 500, odd_order: int = 300, spt_up_to: int = 40
) -> VerdictReport:
    """Odd moments vanish, ``M_2(n) = 2n p(n)``, Andrews' spt formula against
    enumeration, ``D_2 = 2 spt``, row sums equal ``p(n)``, and Ramanujan's
    congruences for every argument up to ``order``.
    """
    witnesses: list[Witness] = []
    p = partition_numbers(order)

    odd_order = min(odd_order, order)
    tables = {"M": crank_bivariate(odd_order), "N": rank_bivariate(odd_order)}
    for name, table in tables.items():
        for r in (1, 3):
            signed = moment_from_table(table, r, use_symmetry=False)
            witnesses += [
                Witness(f"{name}_{r}({n})", 0, v) for n, v in enumerate(signed.values) if v
            ]
        witnesses += [
            Witness(f"{name} row sum ({n})", p[n], s) for n, s in enumerate(table.row_sums()) if s != p[n]
        ]

    m2 = crank_moments(1, order)
    witnesses += [
        Witness(f"M_2({n})", 2 * n * p[n], m2[n]) for n in range(order + 1) if m2[n] != 2 * n * p[n]
    ]

    top = min(spt_up_to, order)
    if top >= 1:
        n2 = rank_moments(1, top)
        d2 = diff_table(1, top)
        for n in range(1, top + 1):
            counted = spt_enumerate(n)
            if 2 * (n * p[n]) - n2[n] != 2 * counted:
                witnesses.append(Witness(f"spt({n})", counted, Fraction(2 * n * p[n] - n2[n], 2)))
            if d2[n] != 2 * counted:
                witnesses.append(Witness(f"D_2({n})", 2 * counted, d2[n]))

    for mod, res in RAMANUJAN:
        for arg in range(res, order + 1, mod):
            if p[arg] % mod:
                witnesses.append(Witness(f"p({arg}) mod {mod}", 0, p[arg] % mod))

    params = {"n_max": order, "odd_n_max": odd_order, "spt_n_max": top}
    return _report("identities", params, witnesses)


# -- constants -------------------------------------------------------------------------


def verify_constants(
    k_max: int = 20,
    triple_max: int = 6,
    xi_closed: Callable[[int], Fraction] = constants.xi,
    xi_prime_closed: Callable[[int], Fraction] = constants.xi_prime,
) -> VerdictReport:
    """Closed forms against recurrences, and every matching identity.

    ``xi_closed`` / ``xi_prime_closed`` can be swapped for fault injection.
    """
    w: list[Witness] = []
    for k in range(k_max + 1):
        closed, rec = xi_closed(k), constants.xi_via_recurrence(k)
        if closed != rec:
            w.append(Witness(f"xi k={k}", rec, closed))
        if closed <= 0:
            w.append(Witness(f"xi positive k={k}", "> 0", closed))
        closed_p, rec_p = xi_prime_closed(k), constants.xi_prime_via_recurrence(k)
        if closed_p != rec_p:
            w.append(Witness(f"xi_prime k={k}", rec_p, closed_p))
    for k in range(1, k_max + 1):
        gap = constants.xi_tilde(k) - constants.lambda_tilde(k)
        want = Fraction(2 * k * (2 * k - 1), 2) * constants.xi(k - 1)
        if gap != want:
            w.append(Witness(f"xi_tilde - lambda_tilde k={k}", want, gap))

    for s in range(triple_max + 1):
        for a, b, c in bernoulli.even_compositions(s):
            pairs = (
                ("xi3", constants.xi_triple(a, b, c), constants.xi_triple_via_recurrence(a, b, c)),
                (
                    "xi3_prime",
                    constants.xi_triple_prime(a, b, c),
                    constants.xi_triple_prime_via_recurrence(a, b, c),
                ),
            )
            for name, closed, rec in pairs:
                if closed != rec:
                    w.append(Witness(f"{name} ({a},{b},{c})", rec, closed))
            if constants.xi_triple(c, a, b) != constants.xi_triple(a, b, c):
                w.append(Witness(f"xi3 symmetry ({a},{b},{c})", "symmetric", "asymmetric"))

    identities = (
        ("bernoulli convolution", bernoulli.convolution_half_sides),
        ("triple bernoulli sum", bernoulli.triple_convolution_sides),
        ("leading order", constants.leading_order_sides),
        ("second order", constants.second_order_sides),
    )
    for k in range(1, k_max + 1):
        for name, sides in identities:
            lhs, rhs = sides(k)
            if lhs != rhs:
                w.append(Witness(f"{name} k={k}", rhs, lhs))
        if not constants.check_xi_prime_identity(k):
            w.append(Witness(f"xi_prime identity k={k}", True, False))
    return _report("constants", {"k_max": k_max, "triple_max": triple_max}, w)
