"""Heavy-tail analysis with the Zenga inequality curve.

The curve ``lambda(p) = 1 - log(1 - Q(F^-1(p))) / log(1 - p)`` is constant
at ``1/alpha`` for Pareto data and tends to ``1/alpha`` for any regularly
varying tail, and it keeps that level under left truncation.  This package
computes the curve exactly for reference families and empirically from
data, estimates the tail index as the inverse mean ordinate, tests the
Pareto null by parametric bootstrap, and replicates the truncation
experiments.
"""

from .distributions import (
    Distribution,
    Frechet,
    LogNormal,
    Pareto,
    lambda_profile,
    parse_distribution,
    truncate,
)
from .empirical import (
    LambdaCurve,
    SortedSample,
    ecdf,
    empirical_q,
    lambda_curve,
    load_values,
    lorenz,
)
from .errors import (
    DataError,
    DegeneracyError,
    DomainError,
    InfiniteMeanError,
    UnsupportedFamilyError,
    ZengaError,
)
from .estimators import (
    GofResult,
    HillEstimate,
    TailIndexEstimate,
    hill_estimator,
    lambda_tail_index,
    pareto_gof_test,
)
from .experiments import (
    P_GRID,
    CurveEnsemble,
    EstimatorRow,
    ExperimentConfig,
    ExperimentReport,
    estimator_benchmark,
    replicate_curves,
    truncation_sweep,
)
from .rng import child_seed, splitmix64, uniform_open
from .svg import line_chart

__version__ = "0.1.0"

__all__ = [
    "Distribution",
    "Pareto",
    "Frechet",
    "LogNormal",
    "parse_distribution",
    "truncate",
    "lambda_profile",
    "SortedSample",
    "LambdaCurve",
    "ecdf",
    "empirical_q",
    "lorenz",
    "lambda_curve",
    "load_values",
    "TailIndexEstimate",
    "HillEstimate",
    "GofResult",
    "lambda_tail_index",
    "hill_estimator",
    "pareto_gof_test",
    "P_GRID",
    "ExperimentConfig",
    "EstimatorRow",
    "CurveEnsemble",
    "ExperimentReport",
    "replicate_curves",
    "estimator_benchmark",
    "truncation_sweep",
    "child_seed",
    "splitmix64",
    "uniform_open",
    "line_chart",
    "ZengaError",
    "DomainError",
    "UnsupportedFamilyError",
    "InfiniteMeanError",
    "DataError",
    "DegeneracyError",
    "__version__",
]
