"""Scalar special functions and the limit laws built from them.

All CDFs accept numpy arrays as well as floats; a float input returns a float.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243

# argument beyond which 1 - Phi(x) < 1e-16, so the factor rounds to 1.0
PHI_SATURATION = 8.3
MIN_ALPHA = 1e-6

# Bernoulli-number coefficients B_2k / (2k) for the asymptotic digamma series
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def _as_output(x, value):
    if np.ndim(x) == 0:
        return float(value)
    return value


def ln_gamma(x: float) -> float:
    """Natural log of the Gamma function for ``x > 0``."""
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def digamma(x: float) -> float:
    """Logarithmic derivative of the Gamma function for ``x > 0``.

    Shifts ``x`` upward with ``psi(x + 1) = psi(x) + 1/x`` until ``x >= 10``,
    then evaluates the asymptotic expansion in ``1/x**2``.
    """
    if not x > 0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    x = float(x)
    shift = 0.0
    while x < 10.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    for coef in reversed(_DIGAMMA_ASYMPTOTIC):
        series = series * inv2 + coef
    return math.log(x) - 0.5 / x - series * inv2 + shift


def std_normal_cdf(x):
    return _as_output(x, ndtr(x))


def gumbel_cdf(x):
    with np.errstate(over="ignore"):
        value = np.exp(-np.exp(-np.asarray(x, dtype=float)))
    return _as_output(x, value)


def phi_alpha_cdf(y, alpha: float, tol: float = 1e-12):
    """Infinite product ``prod_{j>=0} Phi(y + j*sqrt(alpha))``.

    The product stops at the first factor whose argument reaches 8.3; every
    omitted factor equals 1 to double precision.
    """
    if not alpha >= MIN_ALPHA:
        raise DomainError(
            f"alpha = {alpha} below {MIN_ALPHA}; use the Gumbel law instead")
    if not 1e-15 <= tol <= 1e-6:
        raise DomainError(f"tol = {tol} outside [1e-15, 1e-6]")
    y_arr = np.asarray(y, dtype=float)
    step = math.sqrt(alpha)
    prod = np.ones_like(y_arr)
    arg = y_arr.copy()
    active = np.ones(y_arr.shape, dtype=bool)
    while np.any(active):
        prod = np.where(active, prod * ndtr(arg), prod)
        active &= (arg < PHI_SATURATION) & (prod > 0.0)
        arg = arg + step
    return _as_output(y, prod)


class LawKind(enum.Enum):
    GUMBEL = "gumbel"
    NORMAL = "normal"
    PHI_ALPHA = "phi_alpha"
    RADIAL = "radial"


@dataclass(frozen=True)
class LimitLaw:
    """One of the limit distributions for the (log) spectral radius.

    ``RADIAL`` is the law of the rescaled radius itself in the finite-alpha
    regime, ``F(x) = Phi_alpha(sqrt(alpha)/2 + 2 log(x) / sqrt(alpha))``.
    """

    kind: LawKind
    alpha: float | None = None
    truncation_tol: float = 1e-12

    def __post_init__(self):
        if self.kind in (LawKind.PHI_ALPHA, LawKind.RADIAL):
            if self.alpha is None or not self.alpha >= MIN_ALPHA:
                raise DomainError(f"{self.kind.value} law needs alpha >= {MIN_ALPHA}")

    @classmethod
    def gumbel(cls) -> "LimitLaw":
        return cls(LawKind.GUMBEL)

    @classmethod
    def normal(cls) -> "LimitLaw":
        return cls(LawKind.NORMAL)

    @classmethod
    def phi_alpha(cls, alpha: float) -> "LimitLaw":
        return cls(LawKind.PHI_ALPHA, float(alpha))

    @classmethod
    def radial(cls, alpha: float) -> "LimitLaw":
        return cls(LawKind.RADIAL, float(alpha))

    def describe(self) -> str:
        if self.alpha is None:
            return self.kind.value
        return f"{self.kind.value}(alpha={self.alpha!r})"

    def cdf(self, x):
        return law_cdf(self, x)

    def quantile(self, p: float) -> float:
        return law_quantile(self, p)


def law_cdf(law: LimitLaw, x):
    if law.kind is LawKind.GUMBEL:
        return gumbel_cdf(x)
    if law.kind is LawKind.NORMAL:
        return std_normal_cdf(x)
    if law.kind is LawKind.PHI_ALPHA:
        return phi_alpha_cdf(x, law.alpha, law.truncation_tol)
    # radial law, support (0, inf)
    x_arr = np.asarray(x, dtype=float)
    positive = x_arr > 0
    with np.errstate(divide="ignore"):
        logx = np.log(np.where(positive, x_arr, 1.0))
    root = math.sqrt(law.alpha)
    arg = np.where(positive, root / 2 + 2 * logx / root, -np.inf)
    value = np.where(positive, phi_alpha_cdf(arg, law.alpha, law.truncation_tol), 0.0)
    return _as_output(x, value)


def law_quantile(law: LimitLaw, p, max_abs: float = 1e6):
    """Invert ``law_cdf`` by bracket expansion and bisection.

    Accepts a scalar or an array of probabilities.
    """
    p_arr = np.asarray(p, dtype=float)
    if not np.all((p_arr > 0.0) & (p_arr < 1.0)):
        raise DomainError(f"probabilities must lie in (0, 1), got {p}")
    cdf = lambda v: np.asarray(law_cdf(law, v), dtype=float)
    lo = np.full(p_arr.shape, -1.0)
    hi = np.full(p_arr.shape, 1.0)
    while True:
        low_bad = cdf(lo) > p_arr
        if not low_bad.any():
            break
        lo = np.where(low_bad, 2.0 * lo, lo)
        if np.abs(lo).max() > max_abs:
            raise ConvergenceError(f"no lower bracket within |x| <= {max_abs:g}")
    while True:
        high_bad = cdf(hi) < p_arr
        if not high_bad.any():
            break
        hi = np.where(high_bad, 2.0 * hi, hi)
        if np.abs(hi).max() > max_abs:
            raise ConvergenceError(f"no upper bracket within |x| <= {max_abs:g}")
    for _ in range(2200):
        mid = 0.5 * (lo + hi)
        active = (mid != lo) & (mid != hi)
        if not active.any():
            break
        below = cdf(mid) < p_arr
        lo = np.where(active & below, mid, lo)
        hi = np.where(active & ~below, mid, hi)
    pick_hi = np.abs(cdf(hi) - p_arr) <= np.abs(cdf(lo) - p_arr)
    return _as_output(p, np.where(pick_hi, hi, lo))
