"""
Estimating a tail index from one sample
=======================================

Draw a Pareto sample, build the empirical inequality curve, and read the
tail index off its mean ordinate: alpha_hat = 1 / mean(lambda_hat).  The
Hill estimator on the top order statistics gives an independent reading.
"""

from pathlib import Path

from zenga import Pareto, SortedSample, hill_estimator, lambda_curve, lambda_tail_index, line_chart

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

dist = Pareto(2.0, 1.0)
sample = SortedSample(dist.sample(2000, seed=7))

curve = lambda_curve(sample)
est = lambda_tail_index(sample)
hill = hill_estimator(sample, k=200)

print(f"true alpha          {dist.alpha}")
print(f"curve estimate      {est.alpha_hat:.4f}  (mean ordinate {est.lambda_bar:.4f}, "
      f"m={est.m} of n={est.n})")
print(f"hill estimate       {hill.alpha_hat:.4f}  (k={hill.k})")

# the empirical curve hovers around the flat theoretical level 1/alpha
svg = line_chart(
    curve.p,
    curve.values,
    ref_y=1.0 / dist.alpha,
    x_label="p",
    y_label="lambda_hat(p)",
    title="empirical inequality curve, pareto:2,1, n=2000",
)
(out / "empirical_curve.svg").write_text(svg)
(out / "empirical_curve.csv").write_text(curve.to_csv())
print(f"wrote {out / 'empirical_curve.svg'}")
print(f"wrote {out / 'empirical_curve.csv'}")
