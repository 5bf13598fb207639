"""Kolmogorov-Smirnov tests and QQ points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DataError
from .specfun import LimitLaw, law_quantile

MIN_SAMPLES = 8


@dataclass(frozen=True)
class KsReport:
    statistic: float
    p_value: float
    n1: int
    n2: int | None = None
    law_description: str = ""


def kolmogorov_sf(lam: float, max_terms: int = 100) -> float:
    """Asymptotic tail ``2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lam^2)``.

    Below ``lam = 1`` the alternating series converges slowly, so the
    equivalent theta-function form
    ``1 - sqrt(2 pi)/lam * sum_k exp(-(2k-1)^2 pi^2 / (8 lam^2))`` is used.
    """
    if lam <= 0.0:
        return 1.0
    if lam < 1.0:
        scale = math.pi ** 2 / (8.0 * lam * lam)
        total = 0.0
        for k in range(1, max_terms + 1):
            term = math.exp(-(2 * k - 1) ** 2 * scale)
            total += term
            if term <= 1e-17 * total:
                break
        return min(1.0, max(0.0, 1.0 - math.sqrt(2.0 * math.pi) / lam * total))
    total = 0.0
    sign = 1.0
    prev_term = 0.0
    for k in range(1, max_terms + 1):
        term = 2.0 * sign * math.exp(-2.0 * k * k * lam * lam)
        total += term
        if abs(term) <= 1e-3 * abs(prev_term) or abs(term) <= 1e-12 * total:
            break
        sign = -sign
        prev_term = term
    return min(1.0, max(0.0, total))


def _ks_pvalue(d: float, n_eff: float) -> float:
    root = math.sqrt(n_eff)
    return kolmogorov_sf((root + 0.12 + 0.11 / root) * d)


def _clean(samples, min_size: int) -> np.ndarray:
    x = np.asarray(samples, dtype=float).ravel()
    if np.isnan(x).any():
        raise DataError("samples contain NaN")
    if x.size < min_size:
        raise DataError(f"need at least {min_size} samples, got {x.size}")
    return np.sort(x)


def ks_one_sample(samples: Sequence[float], cdf: Callable, *, law_description: str = "",
                  min_size: int = MIN_SAMPLES) -> KsReport:
    """One-sample KS distance ``sup |ECDF - cdf|`` and its asymptotic p-value.

    ``cdf`` must accept a sorted numpy array.
    """
    x = _clean(samples, min_size)
    n = x.size
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    d = float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))
    return KsReport(d, _ks_pvalue(d, n), n, None, law_description)


def ks_two_sample(a: Sequence[float], b: Sequence[float], *, law_description: str = "",
                  min_size: int = MIN_SAMPLES) -> KsReport:
    xa = _clean(a, min_size)
    xb = _clean(b, min_size)
    grid = np.unique(np.concatenate([xa, xb]))
    fa = np.searchsorted(xa, grid, side="right") / xa.size
    fb = np.searchsorted(xb, grid, side="right") / xb.size
    d = float(np.max(np.abs(fa - fb)))
    n_eff = xa.size * xb.size / (xa.size + xb.size)
    return KsReport(d, _ks_pvalue(d, n_eff), xa.size, xb.size, law_description)


def qq_points(samples: Sequence[float], law: LimitLaw, count: int) -> list[tuple[float, float]]:
    """Theoretical vs empirical quantiles at ``p_i = (i - 1/2) / count``."""
    x = _clean(samples, 1)
    if not 1 <= count <= x.size:
        raise DataError(f"count must lie in 1..{x.size}")
    probs = (np.arange(1, count + 1) - 0.5) / count
    empirical = np.quantile(x, probs, method="inverted_cdf")
    theoretical = np.atleast_1d(law_quantile(law, probs))
    return [(float(t), float(e)) for t, e in zip(theoretical, empirical)]
