"""
Theoretical inequality curves across tail families
==================================================

The curve lambda(p) compares the share of total mass above the p-th
quantile with the share of population above it, on a log scale.  For a
Pareto tail it is flat at 1/alpha; for any regularly varying tail it
approaches 1/alpha as p -> 1; for a log-normal it keeps drifting down.
"""

from pathlib import Path

import numpy as np

from zenga import Frechet, LogNormal, Pareto, lambda_profile, line_chart

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# evaluate each family's curve on a common grid of probabilities
grid = np.arange(1, 100) / 100.0
pareto = Pareto(2.0, 1.0)
frechet = Frechet(2.0)
lognormal = LogNormal(0.0, 1.0)

curves = [
    np.array([d.lambda_p(float(p)) for p in grid])
    for d in (pareto, frechet, lognormal)
]

print("family      lambda(0.10)  lambda(0.50)  lambda(0.99)")
for d, c in zip((pareto, frechet, lognormal), curves):
    print(f"{d.spec_string():<12}  {c[9]:10.4f}  {c[49]:10.4f}  {c[98]:10.4f}")

# the Pareto curve is exactly 1/alpha everywhere
assert np.all(curves[0] == 0.5)

svg = line_chart(
    grid,
    curves,
    labels=("pareto:2,1", "frechet:2", "lognormal:0,1"),
    ref_y=0.5,
    x_label="p",
    y_label="lambda(p)",
    title="theoretical inequality curves",
)
(out / "theoretical_curves.svg").write_text(svg)
print(f"wrote {out / 'theoretical_curves.svg'}")

# the threshold profile lambda(x) makes the Frechet convergence visible:
# far out in the tail it settles onto 1/alpha = 0.5
thresholds = [2.0, 10.0, 100.0, 1000.0]
profile = lambda_profile(frechet, thresholds)
print("\nfrechet:2 threshold profile")
for x, lam in zip(thresholds, profile):
    print(f"  lambda(x={x:>7.1f}) = {lam:.4f}")
