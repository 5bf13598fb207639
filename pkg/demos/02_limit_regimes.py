"""How delta_n = sum_r 1/n_r picks the limit law of the log spectral radius.

Small delta_n gives Gumbel fluctuations, delta_n of order one gives the
Phi_alpha family, and large delta_n gives a normal limit.  Each case below is
standardized with constants computed from the dimensions alone.
"""

from ginibre_radius import (LimitLaw, Regime, gumbel_constants_theorem2a, ks_one_sample,
                            normalizers_theorem1, qq_points, sample_batch_repr,
                            standardize_theorem1, standardize_theorem2a, validate_spec)

cases = [
    ("alpha = 0 (one 1024x1024 factor)", [1024, 1024], Regime.zero()),
    ("alpha = 4 (n=32, m=128)", [32] * 129, Regime.finite(4.0)),
    ("alpha = inf (n=8, m=2048)", [8] * 2049, Regime.infinite()),
    ("rectangular chain (40,60,50,80,40)", [40, 60, 50, 80, 40], None),
]

for label, dims, regime in cases:
    spec = validate_spec(dims)
    regime = regime or Regime.finite(spec.delta_n)
    samples = sample_batch_repr(spec, 5000, root_seed=0)
    v = standardize_theorem1(samples, normalizers_theorem1(spec, regime))
    law = regime.limit_law()
    r = ks_one_sample(v, law.cdf)
    print(f"{label:38s} delta_n={spec.delta_n:8.4f}  law={law.describe():22s} D={r.statistic:.4f}")

# %% In the alpha = 0 case the radius itself, rescaled, is Gumbel too
spec = validate_spec([1024, 1024])
samples = sample_batch_repr(spec, 5000, root_seed=0)
v = standardize_theorem2a(samples, gumbel_constants_theorem2a(spec))
print(f"radius-scale Gumbel statistic: D={ks_one_sample(v, LimitLaw.gumbel().cdf).statistic:.4f}")
print("QQ (Gumbel theoretical, empirical):")
for t, e in qq_points(v, LimitLaw.gumbel(), 9):
    print(f"  {t:7.3f}  {e:7.3f}")
