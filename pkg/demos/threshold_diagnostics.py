"""Threshold selection tools on the bundled survey-sized fixture.

Prints the mean residual life curve and the parameter stability table,
then fits the exceedance model at the chosen threshold.
"""

from importlib.resources import files

import numpy as np

from zeroextreme import build_mesh, fit_extremes, mean_residual_life, stability_table
from zeroextreme.io import read_table

data = read_table(files("zeroextreme") / "data" / "survey_scale.csv")
y = data["response"]
print(f"{len(y)} stations, {np.mean(y > 0):.0%} positive, max {y.max():.1f}")

u = np.arange(5.0, 45.0, 5.0)
mrl = mean_residual_life(y, u)
print("\nthreshold  n_exceed  mean_excess")
for t, n, e in zip(mrl.thresholds, mrl.n_exceed, mrl.mean_excess):
    print(f"{t:9.1f} {n:9d} {e:12.2f}")

tab = stability_table(y, u)
print("\nthreshold  n_exceed     xi   sigma*   flag")
for t, n, xi, s, f in zip(tab.thresholds, tab.n_exceed, tab.xi, tab.sigma_star, tab.flags):
    print(f"{t:9.1f} {n:9d} {xi:6.3f} {s:8.2f}   {f or '-'}")

mesh = build_mesh((0, 0, 20, 20), 1.0, margin=2.0)
fit = fit_extremes(data, ["cov1", "cov2"], mesh, u=20.0)
print(f"\nexceedance model at u=20: {fit.n_exceed} exceedances of {fit.n_rows} rows")
print(f"xi posterior mean {fit.xi['mean']:.3f} (sd {fit.xi['sd']:.3f})")
