"""Reference values used by several test modules, derived independently of the package."""
from rankcrank.bessel import context


def shift_residual_limit(ell, precision=256):
    """Large-n limit of the order-shift residual.

    The Hankel expansion I_nu(y) ~ e^y / sqrt(2 pi y) * sum (-1)^j a_j(nu) / y^j
    cancels through 1/y in the two-term shift, so the residual divided by
    n^-1 I_{-1/2} tends to a_2(nu) n / y_n^2 -> a_2(nu) * 3 / (2 pi^2), with
    a_2 = (mu - 1)(mu - 9) / 128 and mu = 4 nu^2 = (3 - 4 ell)^2.
    """
    ctx = context(precision)
    mu = (3 - 4 * ell) ** 2
    return ctx.mpf((mu - 1) * (mu - 9)) * 3 / (256 * ctx.pi**2)
