"""Tail-index estimators and a Pareto goodness-of-fit test.

The primary estimator inverts the mean ordinate of the empirical inequality
curve: ``alpha_hat = 1 / mean(lambda_hat_i)`` over the retained indices
``i = 1..m``.  Because the population curve is the constant ``1/alpha`` for
Pareto and tends to ``1/alpha`` for any regularly varying tail, the same
recipe applies untouched to truncated power-tail data.

Hill's estimator over the top ``k`` order statistics is included as the
classical reference point; it takes no default ``k`` because the choice is
the caller's context.

The goodness-of-fit test measures flatness of the curve,

    D = max_i | lambda_hat_i - mean(lambda_hat) |,

and calibrates it by parametric bootstrap from the fitted null
``Pareto(alpha_hat, X_(1))`` with the add-one p-value
``(1 + #{D* >= D}) / (B + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import Pareto
from .empirical import LambdaCurve, SortedSample, lambda_curve, _SHARE_CEILING
from .errors import DegeneracyError, DomainError
from .formatting import f17, fbool
from .rng import child_seed, uniform_open, validate_seed

__all__ = [
    "MIN_BOOT",
    "TailIndexEstimate",
    "HillEstimate",
    "GofResult",
    "lambda_tail_index",
    "hill_estimator",
    "pareto_gof_test",
]

# Smallest bootstrap size: B = 99 gives the p-value a 0.01 granularity.
MIN_BOOT = 99

# Rows per bootstrap batch are capped so batching never exceeds ~64 MB and,
# because every replicate owns its child seed, never changes the bytes.
_BATCH_BUDGET = 8_000_000


def _require_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class TailIndexEstimate:
    """Result of the curve-based tail-index fit."""

    alpha_hat: float
    lambda_bar: float
    n: int
    m: int
    suspect_infinite_mean: bool

    CSV_HEADER = "alpha_hat,lambda_bar,n,m,suspect_infinite_mean"

    def to_csv_row(self) -> str:
        return ",".join(
            [
                f17(self.alpha_hat),
                f17(self.lambda_bar),
                str(self.n),
                str(self.m),
                fbool(self.suspect_infinite_mean),
            ]
        )

    def to_kv_text(self) -> str:
        return (
            f"alpha_hat={f17(self.alpha_hat)}\n"
            f"lambda_bar={f17(self.lambda_bar)}\n"
            f"n={self.n}\n"
            f"m={self.m}\n"
            f"suspect_infinite_mean={fbool(self.suspect_infinite_mean)}\n"
        )


@dataclass(frozen=True)
class HillEstimate:
    """Hill fit over the top ``k`` order statistics."""

    gamma_hat: float
    alpha_hat: float
    k: int

    CSV_HEADER = "gamma_hat,alpha_hat,k"

    def to_csv_row(self) -> str:
        return ",".join([f17(self.gamma_hat), f17(self.alpha_hat), str(self.k)])

    def to_kv_text(self) -> str:
        return (
            f"gamma_hat={f17(self.gamma_hat)}\n"
            f"alpha_hat={f17(self.alpha_hat)}\n"
            f"k={self.k}\n"
        )


@dataclass(frozen=True)
class GofResult:
    """Bootstrap goodness-of-fit result for the Pareto null."""

    statistic: float
    p_value: float
    n_boot: int
    alpha_hat_null: float
    statistic_name: str = "max_abs_deviation"

    CSV_HEADER = "statistic,p_value,n_boot,alpha_hat_null,statistic_name"

    def to_csv_row(self) -> str:
        return ",".join(
            [
                f17(self.statistic),
                f17(self.p_value),
                str(self.n_boot),
                f17(self.alpha_hat_null),
                self.statistic_name,
            ]
        )

    def to_kv_text(self) -> str:
        return (
            f"statistic={f17(self.statistic)}\n"
            f"p_value={f17(self.p_value)}\n"
            f"n_boot={self.n_boot}\n"
            f"alpha_hat_null={f17(self.alpha_hat_null)}\n"
            f"statistic_name={self.statistic_name}\n"
        )


def _estimate_from_curve(sample: SortedSample, curve: LambdaCurve) -> TailIndexEstimate:
    if sample.values[0] == sample.values[-1]:
        raise DegeneracyError(
            "sample has no dispersion (all values equal); the tail index is undefined"
        )
    lambda_bar = float(np.mean(curve.values))
    if lambda_bar <= 0.0:
        raise DegeneracyError("mean curve ordinate is zero; the tail index diverges")
    alpha_hat = 1.0 / lambda_bar
    return TailIndexEstimate(
        alpha_hat=alpha_hat,
        lambda_bar=lambda_bar,
        n=curve.n,
        m=curve.m,
        suspect_infinite_mean=alpha_hat <= 1.0,
    )


def lambda_tail_index(sample: SortedSample) -> TailIndexEstimate:
    """Estimate the tail exponent as the inverse mean curve ordinate.

    Sets ``suspect_infinite_mean`` when ``alpha_hat <= 1``: the estimate then
    sits where the population mean (and so the curve itself) stops existing,
    which usually means the data are too wild for this diagnostic.
    """
    return _estimate_from_curve(sample, lambda_curve(sample))


def hill_estimator(sample: SortedSample, k: int) -> HillEstimate:
    """Hill estimator ``gamma_hat = mean log(X_(n-i+1) / X_(n-k))``, ``i<=k``.

    ``k`` must satisfy ``1 <= k <= n - 1``.  No default is provided; the
    bias/variance trade-off in ``k`` belongs to the caller.
    """
    k = _require_int(k, "k")
    n = sample.n
    if not 1 <= k <= n - 1:
        raise DomainError(f"k must satisfy 1 <= k <= n-1 = {n - 1}, got {k}")
    xs = sample.values
    base = xs[n - k - 1]
    gamma = float(np.mean(np.log(xs[n - k :]) - math.log(base)))
    if gamma <= 0.0:
        raise DegeneracyError(
            "top order statistics are tied at the threshold; Hill slope is zero"
        )
    return HillEstimate(gamma_hat=gamma, alpha_hat=1.0 / gamma, k=k)


def _lambda_matrix(x: np.ndarray) -> np.ndarray:
    """Curve ordinates for each row of a ``(reps, n)`` sample matrix.

    Row ``r`` matches ``lambda_curve(SortedSample(x[r])).values`` bit for
    bit: same sequential partial sums, same ``log1p`` arrangement.
    """
    n = x.shape[1]
    m = n - math.isqrt(n)
    xs = np.sort(x, axis=1)
    cum = np.cumsum(xs, axis=1)
    shares = cum[:, :m] / cum[:, -1:]
    if np.any(shares >= _SHARE_CEILING):
        raise DegeneracyError(
            "partial sums exhaust a replicate's total before the cutoff"
        )
    p = np.arange(1, m + 1) / n
    return 1.0 - np.log1p(-shares) / np.log1p(-p)


def pareto_gof_test(sample: SortedSample, n_boot: int, seed: int) -> GofResult:
    """Test the Pareto null by bootstrap calibration of curve flatness.

    The null is ``Pareto(alpha_hat, X_(1))`` with ``alpha_hat`` refit on the
    observed sample; each of the ``n_boot >= 99`` replicates draws ``n``
    values from it (replicate ``b`` uses ``child_seed(seed, b)``), and the
    p-value is ``(1 + #{D* >= D}) / (n_boot + 1)``.
    """
    n_boot = _require_int(n_boot, "n_boot")
    if n_boot < MIN_BOOT:
        raise DomainError(f"n_boot must be at least {MIN_BOOT}, got {n_boot}")
    validate_seed(seed)
    curve = lambda_curve(sample)
    estimate = _estimate_from_curve(sample, curve)
    d_obs = float(np.max(np.abs(curve.values - estimate.lambda_bar)))
    null = Pareto(estimate.alpha_hat, float(sample.values[0]))
    n = sample.n
    rows_per_batch = max(1, _BATCH_BUDGET // n)
    exceed = 0
    done = 0
    while done < n_boot:
        rows = min(rows_per_batch, n_boot - done)
        u = np.empty((rows, n))
        for j in range(rows):
            u[j] = uniform_open(child_seed(seed, done + j), n)
        lam = _lambda_matrix(null.quantile(u))
        d_star = np.max(np.abs(lam - lam.mean(axis=1, keepdims=True)), axis=1)
        exceed += int(np.sum(d_star >= d_obs))
        done += rows
    p_value = (1.0 + exceed) / (n_boot + 1.0)
    return GofResult(
        statistic=d_obs,
        p_value=p_value,
        n_boot=n_boot,
        alpha_hat_null=estimate.alpha_hat,
    )
