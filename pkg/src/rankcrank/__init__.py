"""Exact partition rank and crank moments with their Bessel-function asymptotics."""
from .bernoulli import bernoulli_half, bernoulli_number, bernoulli_poly
from .bessel import Prediction, bessel_i_half, bessel_i_series, predict, y_of_n
from .constants import (
    ConstantSet,
    alpha,
    beta_coeff,
    constant_set,
    lambda_tilde,
    xi,
    xi_prime,
    xi_tilde,
    xi_triple,
    xi_triple_prime,
)
from .moments import (
    MomentTable,
    crank_bivariate,
    crank_moment_series,
    crank_moments,
    diff_table,
    rank_bivariate,
    rank_moments,
    spt,
)
from .series import BiSeries, QSeries, partition_numbers, partition_series
from .verify import (
    VerdictReport,
    convergence_report,
    verify_constants,
    verify_exact_identities,
    verify_inequality,
    verify_pde,
)

__version__ = "0.1.0"
