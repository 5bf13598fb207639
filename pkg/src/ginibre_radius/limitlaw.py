"""Normalizing constants and standardized statistics for the spectral radius.

With ``delta_n = sum_r 1/n_r`` and ``alpha = lim delta_n``:

* log scale, any alpha: ``2 delta_n^{-1/2} (log R - psi_sum/2)`` centred by
  ``a_n`` and scaled by ``b_n`` tends to ``Phi_alpha`` (Gumbel at alpha = 0,
  standard normal at alpha = inf);
* alpha = 0: ``alpha_n (R / sqrt(prod n_r) - 1) - beta_n`` tends to Gumbel;
* 0 < alpha < inf: ``R / sqrt(prod n_r)`` tends to the radial law.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ensemble import EnsembleSpec, log_dim_sum, psi_sum
from .errors import DomainError, GuardError
from .repr_sampler import LogRadiusSample
from .specfun import MIN_ALPHA, LimitLaw

AUTO_ZERO_BELOW = 0.05
AUTO_INFINITE_ABOVE = 20.0


class RegimeKind(enum.Enum):
    ALPHA_ZERO = "alpha-zero"
    ALPHA_FINITE = "alpha-finite"
    ALPHA_INFINITE = "alpha-infinite"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    alpha: float | None = None

    def __post_init__(self):
        if self.kind is RegimeKind.ALPHA_FINITE and not (self.alpha is not None and self.alpha > 0):
            raise DomainError("a finite regime needs alpha > 0")

    @classmethod
    def zero(cls):
        return cls(RegimeKind.ALPHA_ZERO)

    @classmethod
    def finite(cls, alpha: float):
        return cls(RegimeKind.ALPHA_FINITE, float(alpha))

    @classmethod
    def infinite(cls):
        return cls(RegimeKind.ALPHA_INFINITE)

    def limit_law(self) -> LimitLaw:
        """Limit of the log-scale statistic under this regime."""
        if self.kind is RegimeKind.ALPHA_ZERO:
            return LimitLaw.gumbel()
        if self.kind is RegimeKind.ALPHA_INFINITE:
            return LimitLaw.normal()
        return LimitLaw.phi_alpha(self.alpha)


@dataclass(frozen=True)
class Normalizers:
    center: float
    scale: float
    a_n: float
    b_n: float
    delta_n: float


@dataclass(frozen=True)
class GumbelConstants:
    alpha_n: float
    beta_n: float
    log_scale_center: float


def a_norm(y: float) -> float:
    if not y > 1:
        raise DomainError(f"a(y) needs y > 1, got {y}")
    ly = math.log(y)
    return math.sqrt(ly) - math.log(math.sqrt(2 * math.pi) * ly) / math.sqrt(ly)


def b_norm(y: float) -> float:
    if not y > 1:
        raise DomainError(f"b(y) needs y > 1, got {y}")
    return 1.0 / math.sqrt(math.log(y))


def normalizers_theorem1(spec: EnsembleSpec, regime: Regime) -> Normalizers:
    delta = spec.delta_n
    if regime.kind is RegimeKind.ALPHA_ZERO:
        if not delta < 1:
            raise DomainError(f"alpha-zero normalization needs delta_n < 1, got {delta}")
        a_n, b_n = a_norm(1.0 / delta), b_norm(1.0 / delta)
    else:
        a_n, b_n = 0.0, 1.0
    return Normalizers(
        center=0.5 * psi_sum(spec),
        scale=0.5 * math.sqrt(delta),
        a_n=a_n,
        b_n=b_n,
        delta_n=delta,
    )


def _log_radii(samples) -> np.ndarray:
    return np.array([s.log_radius if isinstance(s, LogRadiusSample) else s for s in samples],
                    dtype=float)


def standardize_theorem1(samples: Sequence[LogRadiusSample], norms: Normalizers) -> np.ndarray:
    """``((log R - center) / scale - a_n) / b_n`` for each sample."""
    x = _log_radii(samples)
    return ((x - norms.center) / norms.scale - norms.a_n) / norms.b_n


def gumbel_constants_theorem2a(spec: EnsembleSpec) -> GumbelConstants:
    delta = spec.delta_n
    if not delta < 1:
        raise DomainError(f"Gumbel constants need delta_n < 1, got {delta}")
    neg_log = -math.log(delta)
    return GumbelConstants(
        alpha_n=2.0 * math.sqrt(neg_log / delta),
        beta_n=neg_log - math.log(neg_log) - 0.5 * math.log(2 * math.pi),
        log_scale_center=0.5 * log_dim_sum(spec),
    )


def standardize_theorem2a(samples: Sequence[LogRadiusSample], consts: GumbelConstants) -> np.ndarray:
    """``alpha_n (R / sqrt(prod n_r) - 1) - beta_n``, the ratio taken in log space."""
    x = _log_radii(samples)
    return consts.alpha_n * np.expm1(x - consts.log_scale_center) - consts.beta_n


def radial_law_theorem2b(alpha: float) -> LimitLaw:
    if not alpha >= MIN_ALPHA:
        raise DomainError(f"alpha = {alpha} below {MIN_ALPHA}")
    return LimitLaw.radial(alpha)


def radial_statistic(samples: Sequence[LogRadiusSample], spec: EnsembleSpec) -> np.ndarray:
    """``R / sqrt(prod n_r)``, the quantity whose limit is the radial law."""
    return np.exp(_log_radii(samples) - 0.5 * log_dim_sum(spec))


def regime_of(spec: EnsembleSpec, declared: Regime | None = None) -> Regime:
    """Regime for a single finite ensemble.

    A declared regime is checked against its guard and returned.  Otherwise a
    heuristic classifies ``delta_n`` (zero below 0.05, infinite above 20).
    """
    delta = spec.delta_n
    if declared is not None:
        if declared.kind is RegimeKind.ALPHA_ZERO and not delta < 1:
            raise GuardError(f"alpha-zero regime requires delta_n < 1, got {delta:g}")
        return declared
    if delta < AUTO_ZERO_BELOW:
        return Regime.zero()
    if delta > AUTO_INFINITE_ABOVE:
        return Regime.infinite()
    return Regime.finite(delta)
