"""
Rank and crank moments
======================

Exact crank and rank counts from their generating functions, the moments
built from them, and Garvan's inequality between the two.
"""

from rankcrank.moments import (
    crank_bivariate,
    crank_moments,
    diff_table,
    enumerate_oracle,
    rank_bivariate,
    rank_moments,
    spt_enumerate,
)

# Rows of the crank and rank tables: number of partitions of n with each value.
crank = crank_bivariate(8)
rank = rank_bivariate(8)
for n in range(1, 6):
    print(f"n={n}  crank {dict(sorted(crank.row(n).items()))}  rank {dict(sorted(rank.row(n).items()))}")

# n = 1 follows the generating function, so the crank row is x + 1/x - 1.

# Listing every partition gives the same tables.
oc, orank = enumerate_oracle(20)
print("tables match enumeration for n <= 20:", crank_bivariate(20) == oc and rank_bivariate(20) == orank)

# Crank moments have a second route through divisor sums; the two agree.
T = 200
print("M_4 by both routes agree:", crank_moments(2, T).values == crank_moments(2, T, "bivariate").values)

# A few moments side by side.
M2, N2 = crank_moments(1, T), rank_moments(1, T)
M4, N4 = crank_moments(2, T), rank_moments(2, T)
for n in (2, 4, 10, 50, 200):
    print(f"n={n:>3}  M2={M2[n]}  N2={N2[n]}  M4={M4[n]}  N4={N4[n]}")

# D_2(n) = 2 spt(n), with spt counted directly.
D2 = diff_table(1, 30)
print("D_2 = 2 spt for n <= 30:", all(D2[n] == 2 * spt_enumerate(n) for n in range(1, 31)))

# Garvan's inequality M_2k(n) > N_2k(n) for n >= 2.
for k in range(1, 6):
    d = diff_table(k, T)
    print(f"k={k}: min D_{2 * k}(n) over 2 <= n <= {T} is {min(d.values[2:])}")
