"""
Verification reports
====================

Each check returns a VerdictReport that serializes to JSON.  Failing reports
carry witnesses that point at the first disagreements.
"""

from fractions import Fraction

from rankcrank import constants
from rankcrank.moments import rank_moments
from rankcrank.series import QSeries
from rankcrank.verify import (
    convergence_report,
    verify_constants,
    verify_exact_identities,
    verify_inequality,
    verify_pde,
)

# The rank-crank PDE holds exactly, coefficient by coefficient.
for k in range(1, 6):
    print(f"PDE k={k}:", verify_pde(k, 200).status)

# Corrupt one rank moment and the PDE points straight at it.
n4 = list(rank_moments(2, 200).values)
n4[7] += 1
broken = verify_pde(2, 200, rank_override={2: QSeries(n4)})
print("corrupted N_4(7):", broken.status, "first witness at", broken.witnesses[0].location)

print("inequality k<=5, n<=500:", verify_inequality(5, 500).status)
print("exact identities n<=500:", verify_exact_identities(500).status)
print("constants k<=20:", verify_constants().status)

# A wrong closed form for xi_4 is caught.
bad = verify_constants(k_max=4, xi_closed=lambda k: Fraction(7, 121) if k == 2 else constants.xi(k))
print("xi_4 -> 7/121:", bad.status, [w.location for w in bad.witnesses])

# Convergence reports carry their metrics table.
report = convergence_report("diff", 1, [100, 250, 500])
print(report.to_json(indent=1))
