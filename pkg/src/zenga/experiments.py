"""Monte Carlo experiments: curve ensembles, estimator benchmarks,
truncation sweeps.

Replication ``r`` of a run with seed ``s`` always draws its sample from the
stream ``child_seed(s, r)``, and every truncation level reuses that same
draw.  Results are therefore bitwise reproducible for a given config, do not
depend on the ``workers`` setting (the fold over replications happens in
index order), and the zero-truncation row of a sweep coincides exactly with
the plain benchmark.

Truncation at level ``q`` drops every observation ``<=`` the empirical
``q``-quantile (the order statistic ``X_(ceil(q n))``); ``q = 0`` keeps the
sample untouched.  A truncated replicate that retains fewer than 4 values is
recorded as a failure rather than estimated.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distributions import Distribution, Frechet, Pareto
from .empirical import LambdaCurve, SortedSample, lambda_curve
from .errors import DegeneracyError, DomainError, UnsupportedFamilyError
from .estimators import hill_estimator, lambda_tail_index
from .formatting import f17, fcell
from .rng import child_seed, validate_seed

__all__ = [
    "P_GRID",
    "ExperimentConfig",
    "EstimatorRow",
    "CurveEnsemble",
    "ExperimentReport",
    "replicate_curves",
    "estimator_benchmark",
    "truncation_sweep",
]

# Common evaluation grid for ensemble curves: p = 0.01 .. 0.99.
P_GRID = np.arange(1, 100) / 100.0
P_GRID.flags.writeable = False

# Below this many retained values a truncated replicate is a failure.
_MIN_SUBSAMPLE = 4


@dataclass(frozen=True)
class ExperimentConfig:
    """Inputs of one Monte Carlo run.

    ``truncation_quantiles`` must be strictly ascending within ``[0, 1)``.
    ``hill_k`` switches the Hill benchmark on; it is validated against the
    full sample size here, while truncated replicates that leave fewer than
    ``hill_k + 1`` values count as Hill failures at run time.
    """

    dist: Distribution
    n: int = 500
    reps: int = 100
    truncation_quantiles: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75)
    seed: int = 0
    hill_k: int | None = None

    def __post_init__(self):
        if not isinstance(self.dist, Distribution):
            raise DomainError(f"dist must be a Distribution, got {self.dist!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or int(self.n) < 2:
            raise DomainError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if isinstance(self.reps, bool) or not isinstance(self.reps, (int, np.integer)) or int(self.reps) < 1:
            raise DomainError(f"reps must be an integer >= 1, got {self.reps!r}")
        object.__setattr__(self, "reps", int(self.reps))
        levels = tuple(float(q) for q in self.truncation_quantiles)
        if not levels:
            raise DomainError("truncation_quantiles must not be empty")
        for q in levels:
            if not (math.isfinite(q) and 0.0 <= q < 1.0):
                raise DomainError(f"truncation level must lie in [0, 1), got {q}")
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise DomainError(f"truncation levels must be strictly ascending, got {levels}")
        object.__setattr__(self, "truncation_quantiles", levels)
        validate_seed(self.seed)
        object.__setattr__(self, "seed", int(self.seed))
        if self.hill_k is not None:
            if isinstance(self.hill_k, bool) or not isinstance(self.hill_k, (int, np.integer)):
                raise DomainError(f"hill_k must be an integer, got {self.hill_k!r}")
            k = int(self.hill_k)
            if not 1 <= k <= self.n - 1:
                raise DomainError(f"hill_k must satisfy 1 <= k <= n-1 = {self.n - 1}, got {k}")
            object.__setattr__(self, "hill_k", k)


@dataclass(frozen=True)
class EstimatorRow:
    """Aggregate of one estimator at one truncation level.

    ``mean_alpha_hat`` and ``sd`` average the successful replicates; they
    are ``None`` when every replicate failed.  ``bias`` and ``rmse`` need a
    true tail index and are ``None`` for families without one.  ``sd`` is
    the population standard deviation, so ``rmse**2 = bias**2 + sd**2``.
    """

    estimator: str
    truncation_q: float
    true_alpha: float | None
    reps: int
    failures: int
    mean_alpha_hat: float | None
    bias: float | None
    sd: float | None
    rmse: float | None


@dataclass(frozen=True, eq=False)
class CurveEnsemble:
    """Mean empirical curves per truncation level on the common grid.

    ``curves`` holds the raw per-replicate curves indexed
    ``[level][replicate]`` (``None`` for failed replicates) when the run
    kept them, else ``None``.
    """

    p_grid: np.ndarray
    levels: tuple[float, ...]
    mean_curves: np.ndarray
    successes: tuple[int, ...]
    failures: tuple[int, ...]
    reference: float | None
    config: ExperimentConfig
    curves: tuple[tuple[LambdaCurve | None, ...], ...] | None = None

    def to_long_csv(self) -> str:
        """Serialize as ``truncation_q,p,mean_lambda`` rows (grid-major)."""
        lines = ["truncation_q,p,mean_lambda"]
        for li, q in enumerate(self.levels):
            for gi, p in enumerate(self.p_grid):
                lines.append(f"{f17(q)},{f17(p)},{fcell(_none_if_nan(self.mean_curves[li, gi]))}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ExperimentReport:
    """Benchmark rows plus the config they came from and the wall time."""

    rows: tuple[EstimatorRow, ...]
    config: ExperimentConfig
    wall_time_s: float

    CSV_HEADER = (
        "estimator,truncation_q,true_alpha,reps,failures,mean_alpha_hat,bias,sd,rmse"
    )

    def to_csv(self) -> str:
        """Serialize the rows; wall time stays off the byte-stable output."""
        lines = [self.CSV_HEADER]
        for row in self.rows:
            lines.append(
                ",".join(
                    [
                        row.estimator,
                        f17(row.truncation_q),
                        fcell(row.true_alpha),
                        str(row.reps),
                        str(row.failures),
                        fcell(row.mean_alpha_hat),
                        fcell(row.bias),
                        fcell(row.sd),
                        fcell(row.rmse),
                    ]
                )
            )
        return "\n".join(lines) + "\n"

    def mean_alpha_spread(self, estimator: str = "lambda") -> float | None:
        """Largest pairwise gap between mean estimates across levels."""
        means = [
            row.mean_alpha_hat
            for row in self.rows
            if row.estimator == estimator and row.mean_alpha_hat is not None
        ]
        if len(means) < 2:
            return None
        return max(means) - min(means)


def _none_if_nan(x: float) -> float | None:
    return None if math.isnan(x) else float(x)


def _empirical_quantile(xs: np.ndarray, q: float) -> float:
    """Order statistic ``X_(i)`` with the smallest ``i`` such that ``i/n >= q``.

    ``xs`` must be ascending.  Index arithmetic starts at ``ceil(q * n)``
    and corrects by direct double comparison against the ``i/n`` grid.
    """
    n = xs.size
    i = int(math.ceil(q * n))
    i = min(max(i, 1), n)
    while i > 1 and (i - 1) / n >= q:
        i -= 1
    while i < n and i / n < q:
        i += 1
    return float(xs[i - 1])


def _truncated(xs: np.ndarray, q: float) -> np.ndarray:
    if q == 0.0:
        return xs
    return xs[xs > _empirical_quantile(xs, q)]


def _map_indexed(fn, count: int, workers: int) -> list:
    if isinstance(workers, bool) or not isinstance(workers, (int, np.integer)) or int(workers) < 1:
        raise DomainError(f"workers must be an integer >= 1, got {workers!r}")
    workers = int(workers)
    if workers == 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def replicate_curves(
    config: ExperimentConfig, keep_curves: bool = False, workers: int = 1
) -> CurveEnsemble:
    """Draw ``reps`` samples, truncate at each level, average the curves.

    Every replicate's curve is evaluated on :data:`P_GRID` by step lookup
    (clamped to the curve's own range) and the mean at each grid point runs
    over the successful replicates only.
    """
    levels = config.truncation_quantiles
    grid_len = P_GRID.size

    def one(r: int) -> list[LambdaCurve | None]:
        xs = np.sort(config.dist.sample(config.n, child_seed(config.seed, r)))
        per_level: list[LambdaCurve | None] = []
        for q in levels:
            sub = _truncated(xs, q)
            if sub.size < _MIN_SUBSAMPLE:
                per_level.append(None)
                continue
            try:
                per_level.append(lambda_curve(SortedSample(sub)))
            except DegeneracyError:
                per_level.append(None)
        return per_level

    results = _map_indexed(one, config.reps, workers)

    values = np.full((len(levels), config.reps, grid_len), np.nan)
    for r, per_level in enumerate(results):
        for li, curve in enumerate(per_level):
            if curve is not None:
                values[li, r] = curve.at(P_GRID)
    mean_curves = np.empty((len(levels), grid_len))
    successes = []
    for li in range(len(levels)):
        ok = ~np.isnan(values[li, :, 0])
        successes.append(int(np.sum(ok)))
        mean_curves[li] = values[li, ok].mean(axis=0) if successes[-1] else np.nan
    mean_curves.flags.writeable = False

    tail = config.dist.tail_index
    return CurveEnsemble(
        p_grid=P_GRID,
        levels=levels,
        mean_curves=mean_curves,
        successes=tuple(successes),
        failures=tuple(config.reps - s for s in successes),
        reference=None if tail is None else 1.0 / tail,
        config=config,
        curves=tuple(zip(*results)) if keep_curves else None,
    )


def _collect_rows(
    config: ExperimentConfig, levels: tuple[float, ...], workers: int
) -> tuple[EstimatorRow, ...]:
    def one(r: int) -> list[tuple[float | None, float | None]]:
        xs = np.sort(config.dist.sample(config.n, child_seed(config.seed, r)))
        per_level: list[tuple[float | None, float | None]] = []
        for q in levels:
            sub = _truncated(xs, q)
            if sub.size < _MIN_SUBSAMPLE:
                per_level.append((None, None))
                continue
            s = SortedSample(sub)
            try:
                a_lambda = lambda_tail_index(s).alpha_hat
            except DegeneracyError:
                a_lambda = None
            a_hill = None
            if config.hill_k is not None and config.hill_k <= s.n - 1:
                try:
                    a_hill = hill_estimator(s, config.hill_k).alpha_hat
                except DegeneracyError:
                    a_hill = None
            per_level.append((a_lambda, a_hill))
        return per_level

    results = _map_indexed(one, config.reps, workers)
    true_alpha = config.dist.tail_index

    def make_row(name: str, slot: int, li: int, q: float) -> EstimatorRow:
        vals = [results[r][li][slot] for r in range(config.reps)]
        ok = np.array([v for v in vals if v is not None], dtype=float)
        failures = len(vals) - ok.size
        if ok.size == 0:
            return EstimatorRow(name, q, true_alpha, config.reps, failures,
                                None, None, None, None)
        mean = float(np.mean(ok))
        sd = float(np.sqrt(np.mean((ok - mean) ** 2)))
        bias = None if true_alpha is None else mean - true_alpha
        rmse = (
            None
            if true_alpha is None
            else float(np.sqrt(np.mean((ok - true_alpha) ** 2)))
        )
        return EstimatorRow(name, q, true_alpha, config.reps, failures,
                            mean, bias, sd, rmse)

    rows = [make_row("lambda", 0, li, q) for li, q in enumerate(levels)]
    if config.hill_k is not None:
        rows.extend(make_row("hill", 1, li, q) for li, q in enumerate(levels))
    return tuple(rows)


def estimator_benchmark(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Benchmark the estimators on untruncated samples from ``config.dist``.

    Equivalent to a sweep at the single level 0; families without a tail
    index get ``na`` in the true-alpha, bias and rmse columns.
    """
    start = time.perf_counter()
    rows = _collect_rows(config, (0.0,), workers)
    return ExperimentReport(rows=rows, config=config,
                            wall_time_s=time.perf_counter() - start)


def truncation_sweep(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Benchmark across ``config.truncation_quantiles`` on shared draws.

    Only power-tail families qualify: the sweep's point is that the true
    index is invariant under left truncation, which holds exactly for
    Pareto and asymptotically for Frechet.  The level-0 rows equal the
    plain :func:`estimator_benchmark` output bit for bit.
    """
    if not isinstance(config.dist, (Pareto, Frechet)):
        raise UnsupportedFamilyError(
            f"truncation sweep needs a power-tail family, got {config.dist}"
        )
    start = time.perf_counter()
    rows = _collect_rows(config, config.truncation_quantiles, workers)
    return ExperimentReport(rows=rows, config=config,
                            wall_time_s=time.perf_counter() - start)
