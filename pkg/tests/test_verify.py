import json
from fractions import Fraction

import pytest

from rankcrank import constants
from rankcrank.bessel import context
from rankcrank.moments import crank_moment_series, rank_moments
from rankcrank.series import QSeries
from rankcrank.verify import (
    VerdictReport,
    Witness,
    combine,
    convergence_report,
    format_float,
    pde_sides,
    verify_constants,
    verify_exact_identities,
    verify_inequality,
    verify_pde,
)


# -- report plumbing ----------------------------------------------------------------


def test_fail_requires_witness():
    with pytest.raises(ValueError):
        VerdictReport("x", {}, "fail")
    with pytest.raises(ValueError):
        VerdictReport("x", {}, "maybe")


def test_report_json_round_trip():
    r = VerdictReport("x", {"k": 2}, "fail", [Witness("q^3", Fraction(1, 3), 7)])
    data = json.loads(r.to_json())
    assert data["witnesses"][0] == {"location": "q^3", "expected": "1/3", "actual": 7}
    assert data["status"] == "fail"


def test_combine_fails_if_any_part_fails():
    ok = VerdictReport("a", {}, "pass")
    bad = VerdictReport("b", {}, "fail", [Witness("n=3", 1, 2)])
    merged = combine("both", [ok, bad])
    assert not merged.passed
    assert merged.witnesses[0].location == "b: n=3"
    assert combine("both", [ok, ok]).passed


def test_format_float_scientific():
    assert format_float(3.0e40, 64) == "3e+40"
    ctx = context(64)
    text = format_float(ctx.mpf(10) ** 40 / 3, 64)
    assert text.endswith("e+39")
    # 64 bits carry 19 significant decimal digits
    assert text.split("e")[0].replace(".", "") == "3" * 19


# -- PDE ------------------------------------------------------------------------------


def test_pde_k1_both_sides_zero():
    order = 60

    def crank(j):
        return crank_moment_series(j, order)

    def rank(j):
        return rank_moments(j, order).as_series()

    lhs, rhs = pde_sides(1, crank, rank, order)
    assert lhs == rhs == QSeries([0] * (order + 1))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pde_passes(k):
    assert verify_pde(k, 120).passed


def test_pde_fault_injection_at_q7():
    n4 = list(rank_moments(2, 200).values)
    n4[7] += 1
    report = verify_pde(2, 200, rank_override={2: QSeries(n4)})
    assert not report.passed
    assert report.witnesses[0].location == "q^7"


def test_pde_rejects_k0():
    with pytest.raises(ValueError):
        verify_pde(0, 10)


# -- inequality -----------------------------------------------------------------------


def test_inequality_passes_and_reports_n1():
    report = verify_inequality(3, 150)
    assert report.passed
    assert any("n=1" in note for note in report.notes)


def test_inequality_examples():
    # M_2(2) = 8 > N_2(2) = 2, M_2(4) = 40 > N_2(4) = 20
    from rankcrank.moments import crank_moments

    assert crank_moments(1, 4)[2] == 8 and rank_moments(1, 4)[2] == 2
    assert crank_moments(1, 4)[4] == 40 and rank_moments(1, 4)[4] == 20


# -- identities and constants -----------------------------------------------------------


def test_exact_identities_pass():
    report = verify_exact_identities(order=200, odd_order=120, spt_up_to=30)
    assert report.passed, report.witnesses


def test_constants_pass():
    assert verify_constants(k_max=12, triple_max=6).passed


def test_constants_fault_injection():
    def broken(k):
        return Fraction(7, 121) if k == 2 else constants.xi(k)

    report = verify_constants(k_max=6, triple_max=2, xi_closed=broken)
    assert not report.passed
    assert any(w.location == "xi k=2" for w in report.witnesses)


def test_constants_fault_injection_xi_prime():
    def broken(k):
        return constants.xi_prime(k) + (1 if k == 3 else 0)

    report = verify_constants(k_max=6, triple_max=2, xi_prime_closed=broken)
    assert [w.location for w in report.witnesses] == ["xi_prime k=3"]


# -- convergence -----------------------------------------------------------------------


def test_convergence_crank_k1_metrics():
    report = convergence_report("crank", 1, [100, 200, 400])
    assert report.passed
    for row in report.metrics:
        assert 0.5 / (24 * row["n"]) <= float(row["rel_err"]) <= 2 / (24 * row["n"])


@pytest.mark.parametrize("kind,k", [("crank", 2), ("crank", 3), ("rank", 1), ("rank", 2), ("rank", 3), ("diff", 1), ("diff", 2)])
def test_convergence_passes(kind, k):
    assert convergence_report(kind, k, [100, 200, 400]).passed


def test_convergence_rank_k0_is_partition_asymptotic():
    report = convergence_report("rank", 0, [100])
    assert float(report.metrics[0]["rel_err"]) < 5e-3


def test_convergence_json_has_no_bare_floats():
    data = convergence_report("diff", 1, [100, 250, 500]).to_dict()
    for row in data["metrics"]:
        assert isinstance(row["exact"], int)
        assert all(isinstance(row[f], str) for f in ("pred1", "rel_err", "scaled_remainder"))
