"""
Asymptotic constants
====================

The rational constants attached to the crank and rank moments, computed from
Bernoulli polynomials at 1/2 and, independently, from their recurrences.
"""

from rankcrank import constants

# One row per k: the constants that govern M_2k and N_2k.
print(f"{'k':>2}  {'xi':>14}  {'xi_prime':>14}  {'xi_tilde':>14}  {'lambda_tilde':>14}  {'alpha':>16}")
for k in range(7):
    c = constants.constant_set(k)
    print(
        f"{k:>2}  {str(c.xi):>14}  {str(c.xi_prime):>14}  {str(c.xi_tilde):>14}"
        f"  {str(c.lambda_tilde):>14}  {str(c.alpha):>16}"
    )

# The recurrences reproduce the closed forms exactly.
same = all(
    constants.xi_via_recurrence(k) == constants.xi(k)
    and constants.xi_prime_via_recurrence(k) == constants.xi_prime(k)
    for k in range(21)
)
print("recurrences agree with closed forms for k <= 20:", same)

# The gap between the crank and rank second-order constants feeds the
# asymptotic for D_2k = M_2k - N_2k.
for k in range(1, 5):
    print(f"k={k}: xi_tilde - lambda_tilde = {constants.xi_tilde(k) - constants.lambda_tilde(k)}")

# Triple-index constants and the identities that make the rank-crank PDE
# balance at leading and second order.
print("xi_(2,2,2) =", constants.xi_triple(1, 1, 1), " xi'_(2,2,2) =", constants.xi_triple_prime(1, 1, 1))
print("matching holds for k <= 12:", all(constants.check_leading_order_matching(k) for k in range(1, 13)))
