"""
Bessel-function predictions
===========================

The moments grow like half-integer order modified Bessel functions evaluated
at y_n = (pi/6) sqrt(24n - 1).  This script compares exact values with the
one- and two-term predictions.
"""

from rankcrank.bessel import bessel_i_half, bessel_i_series, check_shift_lemma, context, predict
from rankcrank.moments import crank_moments, rank_moments
from rankcrank.series import partition_numbers
from rankcrank.verify import format_float

ctx = context(256)

# The order-shift relation against a direct power series at a few orders.
for two_nu in (3, -1, -9, -21):
    a = bessel_i_half(two_nu, 25)
    b = bessel_i_series(two_nu, 25)
    print(f"I_({two_nu}/2)(25) = {format_float(a, 64)}  |diff| = {format_float(abs(a - b), 64)}")

# p(n) against its leading Bessel term.
p = partition_numbers(400)
for n in (10, 100, 400):
    pred = predict("partition", 0, n, terms=1).value
    print(f"p({n}) = {p[n]}  predicted {format_float(pred, 64)}  rel err {format_float(abs(pred - p[n]) / p[n], 32)}")

# Crank and rank moments: relative error of the two-term predictor.
for kind, table in (("crank", crank_moments), ("rank", rank_moments)):
    for k in (1, 2, 3):
        exact = table(k, 400)
        errs = []
        for n in (100, 200, 400):
            pred = predict(kind, k, n).value
            errs.append(format_float(abs(pred - exact[n]) / exact[n], 32))
        print(f"{kind} k={k} rel err at n=100,200,400:", ", ".join(errs))

# Residual of the two-term order shift, scaled by n^-1 I_{-1/2}(y_n); it
# settles to a constant as n grows.
for ell in (2, 3, 5):
    res = [format_float(check_shift_lemma(ell, n), 32) for n in (10, 100, 1000, 10000)]
    print(f"shift residual l={ell}:", ", ".join(res))
