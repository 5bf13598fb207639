"""Spectral radii of products of rectangular complex Ginibre matrices.

Two samplers of the spectral radius (an exact Gamma-product representation
and direct matrix multiplication plus eigenvalues), the normalizing constants
of its limit laws, and Kolmogorov-Smirnov machinery to compare them.
"""

from .ensemble import EnsembleSpec, delta_jk, log_dim_sum, psi_sum, validate_spec
from .errors import *  # noqa: F401,F403
from .limitlaw import (
    GumbelConstants,
    Normalizers,
    Regime,
    RegimeKind,
    a_norm,
    b_norm,
    gumbel_constants_theorem2a,
    normalizers_theorem1,
    radial_law_theorem2b,
    radial_statistic,
    regime_of,
    standardize_theorem1,
    standardize_theorem2a,
)
from .matrix_sampler import (
    product_chain,
    sample_batch_direct,
    sample_ginibre_block,
    sample_log_radius_direct,
    spectral_radius_full,
    spectral_radius_power,
)
from .repr_sampler import (
    Estimator,
    LogRadiusSample,
    log_radii,
    sample_batch_repr,
    sample_gamma_int,
    sample_log_radius_repr,
)
from .rng import RngStream
from .specfun import (
    LawKind,
    LimitLaw,
    digamma,
    gumbel_cdf,
    law_cdf,
    law_quantile,
    ln_gamma,
    phi_alpha_cdf,
    std_normal_cdf,
)
from .stats import KsReport, kolmogorov_sf, ks_one_sample, ks_two_sample, qq_points

__version__ = "0.1.0"
