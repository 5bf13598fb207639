"""Quick invariant checks runnable without pytest (``ginibre-radius selftest``)."""

from __future__ import annotations

import math

import numpy as np

from . import limitlaw
from .ensemble import delta_jk, validate_spec
from .matrix_sampler import sample_batch_direct, spectral_radius_full
from .repr_sampler import log_radii, sample_batch_repr
from .rng import RngStream
from .specfun import EULER_GAMMA, LimitLaw, digamma, law_quantile, phi_alpha_cdf
from .stats import kolmogorov_sf, ks_one_sample, ks_two_sample


def _digamma_oracle():
    harmonic = 0.0
    worst = 0.0
    for n in range(1, 51):
        worst = max(worst, abs(digamma(n) - (harmonic - EULER_GAMMA)))
        harmonic += 1.0 / n
    return worst <= 1e-12, f"max digamma error {worst:.2e}"


def _phi_alpha_oracle():
    value = phi_alpha_cdf(0.0, 4.0)
    return abs(value - 0.48860945818540281) <= 1e-9, f"Phi_4(0) = {value:.12f}"


def _kolmogorov_series():
    value = kolmogorov_sf(1.0)
    return abs(value - 0.27) <= 1e-6, f"Q(1) = {value:.9f}"


def _delta_lemma():
    rng = np.random.default_rng(0)
    for _ in range(200):
        n = int(rng.integers(2, 30))
        m = int(rng.integers(1, 6))
        spec = validate_spec([n] + [n + int(k) for k in rng.integers(0, 20, m - 1)] + [n])
        for j in range(n - n // 2 + 1, n + 1):
            for k in (1.0, 2.0):
                top, here = delta_jk(spec, n, k), delta_jk(spec, j, k)
                if not top <= here < 2 ** k * top:
                    return False, f"fails at {spec}, j={j}, k={k}"
    return True, "200 random chains"


def _quantile_roundtrip():
    laws = (LimitLaw.gumbel(), LimitLaw.normal(), LimitLaw.phi_alpha(4.0), LimitLaw.radial(4.0))
    worst = 0.0
    for law in laws:
        grid = np.linspace(0.2, 3.0, 15) if law.alpha and law.kind.value == "radial" \
            else np.linspace(-2.0, 3.0, 21)
        back = law_quantile(law, law.cdf(grid))
        worst = max(worst, float(np.max(np.abs(back - grid))))
    return worst <= 1e-8, f"max round-trip error {worst:.1e}"


def _exponential_base_case(threads):
    spec = validate_spec([1, 1])
    cdf = lambda x: -np.expm1(-x)
    rep = ks_one_sample(np.exp(2 * log_radii(sample_batch_repr(spec, 2000, 11, threads=threads))), cdf)
    direct = ks_one_sample(np.exp(2 * log_radii(sample_batch_direct(spec, 2000, 11, threads=threads))), cdf)
    ok = rep.p_value >= 0.001 and direct.p_value >= 0.001
    return ok, f"p = {rep.p_value:.3f} (representation), {direct.p_value:.3f} (direct)"


def _small_xcheck(threads):
    spec = validate_spec([4, 6, 5, 4])
    a = log_radii(sample_batch_repr(spec, 1000, 5, threads=threads))
    b = log_radii(sample_batch_direct(spec, 1000, 5, threads=threads, index_offset=1 << 32))
    report = ks_two_sample(a, b)
    return report.p_value >= 0.001, f"D = {report.statistic:.4f}, p = {report.p_value:.3f}"


def _scale_equivariance():
    mat = np.asarray(RngStream(3, 0).normal((8, 8))) + 0j
    base = spectral_radius_full(mat)
    worst = max(abs(spectral_radius_full(c * mat) - abs(c) * base) / base for c in (2.0, 1j))
    return worst <= 1e-10, f"relative error {worst:.1e}"


def _square_reduction():
    spec = validate_spec([16] * 9)
    ok = spec.delta_n == 8 / 16
    c = limitlaw.gumbel_constants_theorem2a(spec)
    ok &= math.isclose(c.alpha_n * math.sqrt(spec.delta_n) / 2, math.sqrt(-math.log(0.5)),
                       rel_tol=0, abs_tol=1e-12)
    return ok, f"delta_n = {spec.delta_n!r}"


def run_selftest(threads: int = 1, out=print) -> bool:
    checks = [
        ("digamma vs harmonic numbers", _digamma_oracle),
        ("Phi_alpha truncated product", _phi_alpha_oracle),
        ("Kolmogorov series", _kolmogorov_series),
        ("delta_jk bracketing", _delta_lemma),
        ("quantile/cdf round trip", _quantile_roundtrip),
        ("spectral radius scale equivariance", _scale_equivariance),
        ("square-ensemble constants", _square_reduction),
        ("Exp(1) base case, both samplers", lambda: _exponential_base_case(threads)),
        ("representation vs direct (4,6,5,4)", lambda: _small_xcheck(threads)),
    ]
    all_ok = True
    for name, check in checks:
        ok, detail = check()
        all_ok &= bool(ok)
        out(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return all_ok
