"""
Partitions and truncated q-series
=================================

Exact power series with rational coefficients, the partition generating
function, and the three Ramanujan congruences on its coefficients.
"""

from rankcrank.series import (
    QSeries,
    divisor_series,
    eisenstein_series,
    partition_numbers,
    partition_series,
    pentagonal_series,
    series_inverse,
)

# Truncate everything at q^40.
T = 40

# Euler's product times the partition series is exactly 1 up to q^T.
P = partition_series(T)
print("P * (q;q)_inf == 1:", P * pentagonal_series(T) == QSeries.one(T))

# Inverting the partition series recovers the pentagonal signs.
print("1/P:", series_inverse(P).integers()[:16])

# p(n) for larger n comes from the sparse pentagonal recurrence.
p = partition_numbers(500)
print("p(100) =", p[100])
print("p(500) =", p[500])

# p(5n+4), p(7n+5) and p(11n+6) are divisible by 5, 7 and 11.
for mod, res in ((5, 4), (7, 5), (11, 6)):
    ok = all(p[a] % mod == 0 for a in range(res, 501, mod))
    print(f"p({mod}n+{res}) = 0 mod {mod} for all arguments <= 500:", ok)

# Divisor-sum series and the Eisenstein series built from them.
print("sigma_3(1..8):", divisor_series(3, 8).integers()[1:])
print("E_4:", eisenstein_series(4, 6).integers())
print("E_2:", eisenstein_series(2, 6).integers())
