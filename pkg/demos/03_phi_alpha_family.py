"""The Phi_alpha family between the Gumbel (alpha -> 0) and normal (alpha -> inf) limits.

As alpha grows the extra factors Phi(y + j sqrt(alpha)) saturate and the
product collapses onto Phi(y).  As alpha shrinks the mass drifts right; the
alpha = 0 case only becomes Gumbel after the a_n, b_n recentring.
"""

import numpy as np

from ginibre_radius import LimitLaw, law_quantile, phi_alpha_cdf, std_normal_cdf

ys = np.linspace(-3, 3, 7)
print("y      " + "  ".join(f"a={a:<6g}" for a in (0.01, 0.25, 1, 4, 25)) + "  normal")
for y in ys:
    row = [phi_alpha_cdf(float(y), a) for a in (0.01, 0.25, 1, 4, 25)]
    print(f"{y:5.1f}  " + "  ".join(f"{v:8.5f}" for v in row) + f"  {std_normal_cdf(float(y)):.5f}")

# %% Median of Phi_alpha against Gumbel and normal medians
for alpha in (1e-3, 0.1, 1.0, 10.0, 100.0):
    print(f"median Phi_{alpha:g}: {law_quantile(LimitLaw.phi_alpha(alpha), 0.5):8.4f}")
print(f"median normal: {law_quantile(LimitLaw.normal(), 0.5):8.4f}")
