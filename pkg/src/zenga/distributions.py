"""Distribution families and theoretical inequality-curve operations.

The object of study is the inequality curve

    lambda(p) = 1 - log(1 - Q(F^-1(p))) / log(1 - p),    0 < p < 1,

where ``F`` is the cdf and ``Q(x)`` the incomplete first-moment share
``E[X 1{X <= x}] / E[X]``.  The threshold form

    lambda(x) = 1 - log(1 - Q(x)) / log(1 - F(x))

is constant and equal to ``1/alpha`` exactly when ``X`` is Pareto with tail
exponent ``alpha``, and converges to ``1/alpha`` as ``x -> inf`` for any
family whose survival function is regularly varying with index ``-alpha``
(Frechet here).  Log-normal has no such limit and serves as the control
family.

Three families are provided:

* ``Pareto(alpha, x0)``: everything in closed form; ``lambda`` is exactly
  ``1/alpha``.
* ``Frechet(alpha)``: cdf ``exp(-x**-alpha)``; incomplete moments via
  adaptive quadrature.
* ``LogNormal(mu, sigma)``: the non-power-tail control; incomplete moments
  via adaptive quadrature.

Quadrature uses QUADPACK with absolute tolerance ``QUAD_ABS_TOL`` and a hard
subdivision budget; exhausting the budget raises
:class:`~zenga.errors.DegeneracyError` rather than returning a low-quality
value.
"""

from __future__ import annotations

import abc
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import ndtr, ndtri

from .errors import (
    DegeneracyError,
    DomainError,
    InfiniteMeanError,
    UnsupportedFamilyError,
)
from .formatting import f17
from .rng import uniform_open

__all__ = [
    "Distribution",
    "Pareto",
    "Frechet",
    "LogNormal",
    "parse_distribution",
    "truncate",
    "lambda_profile",
    "QUAD_ABS_TOL",
]

# Absolute quadrature tolerance for incomplete first moments.
QUAD_ABS_TOL = 1e-10
# Hard budget on adaptive subdivisions; hitting it is treated as degeneracy.
_QUAD_LIMIT = 200

# Guard against evaluating lambda(x) where 1 - F(x) underflows the formula.
_SF_FLOOR = 1e-15

_TINY = np.finfo(float).tiny


def _as_float_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _require_finite(arr: np.ndarray, name: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")


def _scalar_prob(p) -> float:
    p = float(p)
    if not (0.0 < p < 1.0):
        raise DomainError(f"p must lie strictly in (0, 1), got {p}")
    return p


def _positive_param(value, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a finite positive number, got {value}")
    return value


def _finite_param(value, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value}")
    return value


class Distribution(abc.ABC):
    """Common interface for the supported families."""

    # -- family primitives -------------------------------------------------

    @abc.abstractmethod
    def pdf(self, x):
        """Density at ``x`` (scalar or array)."""

    @abc.abstractmethod
    def cdf(self, x):
        """Distribution function at ``x`` (scalar or array)."""

    @abc.abstractmethod
    def sf(self, x):
        """Survival function ``1 - F(x)``, computed without cancellation."""

    @abc.abstractmethod
    def quantile(self, p):
        """Inverse cdf at ``p`` in the open interval ``(0, 1)``."""

    @abc.abstractmethod
    def mean(self) -> float:
        """First moment; raises :class:`InfiniteMeanError` if it diverges."""

    @property
    @abc.abstractmethod
    def support_min(self) -> float:
        """Left endpoint of the support."""

    @property
    @abc.abstractmethod
    def tail_index(self) -> float | None:
        """Tail exponent ``alpha`` for power-tail families, else ``None``."""

    @property
    @abc.abstractmethod
    def has_finite_mean(self) -> bool: ...

    @abc.abstractmethod
    def spec_string(self) -> str:
        """Compact parseable form, e.g. ``pareto:2,1``."""

    def __str__(self) -> str:
        return self.spec_string()

    # -- sampling ----------------------------------------------------------

    def sample(self, n: int, seed: int) -> np.ndarray:
        """Draw ``n`` values by inverse transform from a seeded stream.

        Deterministic in ``(n, seed)``; see :mod:`zenga.rng` for the stream
        contract.
        """
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or int(n) < 1:
            raise DomainError(f"n must be a positive integer, got {n!r}")
        u = uniform_open(seed, int(n))
        out = self.quantile(u)
        if not np.all(np.isfinite(out)):
            raise DegeneracyError("inverse transform overflowed for this family")
        return out

    # -- incomplete first moment --------------------------------------------

    def _moment_integral(self, lo: float, hi: float) -> float:
        """Adaptive quadrature of ``t * pdf(t)`` over ``[lo, hi]``."""
        result = integrate.quad(
            lambda t: t * self.pdf(t),
            lo,
            hi,
            epsabs=QUAD_ABS_TOL,
            epsrel=0.0,
            limit=_QUAD_LIMIT,
            full_output=1,
        )
        value, abserr = result[0], result[1]
        if not math.isfinite(value) or (len(result) > 3 and abserr > 10.0 * QUAD_ABS_TOL):
            detail = result[3] if len(result) > 3 else "non-finite result"
            raise DegeneracyError(
                f"quadrature budget exhausted on [{lo}, {hi}]: {detail}"
            )
        return float(value)

    def incomplete_moment(self, x) -> float:
        """Share of the mean below ``x``: ``Q(x) = E[X 1{X <= x}] / E[X]``.

        Computed from whichever side of the distribution carries less mass,
        so both ``Q`` and ``1 - Q`` retain absolute accuracy ``QUAD_ABS_TOL``.
        """
        x = float(x)
        if not math.isfinite(x):
            raise DomainError(f"x must be finite, got {x}")
        mu = self.mean()
        if x <= self.support_min:
            return 0.0
        if self.cdf(x) <= 0.5:
            q = self._moment_integral(self.support_min, x) / mu
        else:
            q = 1.0 - self._moment_integral(x, np.inf) / mu
        return min(max(q, 0.0), 1.0)

    def _tail_moment_share(self, x: float) -> float:
        """``1 - Q(x)``, kept accurate when it is the small piece."""
        mu = self.mean()
        if x <= self.support_min:
            return 1.0
        if self.cdf(x) <= 0.5:
            share = 1.0 - self._moment_integral(self.support_min, x) / mu
        else:
            share = self._moment_integral(x, np.inf) / mu
        return min(max(share, 0.0), 1.0)

    # -- inequality curve ----------------------------------------------------

    def lambda_p(self, p) -> float:
        """Theoretical curve value ``lambda(p)`` for ``p`` in ``(0, 1)``."""
        p = _scalar_prob(p)
        if not self.has_finite_mean:
            raise InfiniteMeanError(f"{self} has no finite mean; lambda is undefined")
        x = self.quantile(p)
        tail_share = self._tail_moment_share(float(x))
        if tail_share <= 0.0:
            raise DegeneracyError(f"upper moment share vanished at p={p}")
        return 1.0 - math.log(tail_share) / math.log1p(-p)

    def lambda_x(self, x) -> float:
        """Threshold form ``lambda(x)``; requires ``x`` inside the support."""
        x = float(x)
        if not math.isfinite(x):
            raise DomainError(f"x must be finite, got {x}")
        if not self.has_finite_mean:
            raise InfiniteMeanError(f"{self} has no finite mean; lambda is undefined")
        sf = float(self.sf(x))
        if sf < _SF_FLOOR:
            raise DegeneracyError(
                f"survival probability at x={x} is below {_SF_FLOOR}; "
                "lambda(x) is numerically degenerate this far out"
            )
        if float(self.cdf(x)) <= 0.0:
            raise DomainError(f"x={x} lies at or below the support of {self}")
        tail_share = self._tail_moment_share(x)
        if tail_share <= 0.0:
            raise DegeneracyError(f"upper moment share vanished at x={x}")
        return 1.0 - math.log(tail_share) / math.log(sf)


@dataclass(frozen=True)
class Pareto(Distribution):
    """Pareto Type I with tail exponent ``alpha`` and scale ``x0``.

    ``F(x) = 1 - (x/x0)**-alpha`` for ``x >= x0``.  The inequality curve is
    exactly the constant ``1/alpha`` whenever the mean is finite
    (``alpha > 1``), and all curve operations use that closed form.
    """

    alpha: float
    x0: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _positive_param(self.alpha, "alpha"))
        object.__setattr__(self, "x0", _positive_param(self.x0, "x0"))

    def pdf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        r = np.maximum(arr, self.x0) / self.x0
        val = np.where(
            arr < self.x0, 0.0, self.alpha / self.x0 * r ** (-self.alpha - 1.0)
        )
        return float(val) if scalar else val

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        r = np.maximum(arr, self.x0) / self.x0
        val = -np.expm1(-self.alpha * np.log(r))
        return float(val) if scalar else val

    def sf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        r = np.maximum(arr, self.x0) / self.x0
        val = np.exp(-self.alpha * np.log(r))
        return float(val) if scalar else val

    def quantile(self, p):
        arr, scalar = _as_float_array(p)
        if not np.all((arr > 0.0) & (arr < 1.0)):
            raise DomainError("p must lie strictly in (0, 1)")
        val = self.x0 * (1.0 - arr) ** (-1.0 / self.alpha)
        return float(val) if scalar else val

    def mean(self) -> float:
        if self.alpha <= 1.0:
            raise InfiniteMeanError(f"{self} has alpha <= 1, so E[X] diverges")
        return self.alpha * self.x0 / (self.alpha - 1.0)

    @property
    def support_min(self) -> float:
        return self.x0

    @property
    def tail_index(self) -> float:
        return self.alpha

    @property
    def has_finite_mean(self) -> bool:
        return self.alpha > 1.0

    def spec_string(self) -> str:
        return f"pareto:{f17(self.alpha)},{f17(self.x0)}"

    def incomplete_moment(self, x) -> float:
        x = float(x)
        if not math.isfinite(x):
            raise DomainError(f"x must be finite, got {x}")
        if not self.has_finite_mean:
            raise InfiniteMeanError(f"{self} has alpha <= 1, so E[X] diverges")
        if x <= self.x0:
            return 0.0
        # Q(x) = 1 - (x/x0)**(1-alpha), evaluated via expm1 near the scale.
        return -math.expm1((1.0 - self.alpha) * math.log(x / self.x0))

    def _tail_moment_share(self, x: float) -> float:
        if x <= self.x0:
            return 1.0
        return math.exp((1.0 - self.alpha) * math.log(x / self.x0))

    def lambda_p(self, p) -> float:
        _scalar_prob(p)
        if not self.has_finite_mean:
            raise InfiniteMeanError(f"{self} has no finite mean; lambda is undefined")
        # Constant curve: log(1 - Q) / log(1 - p) = (alpha - 1)/alpha exactly.
        return 1.0 / self.alpha

    def lambda_x(self, x) -> float:
        x = float(x)
        if not math.isfinite(x):
            raise DomainError(f"x must be finite, got {x}")
        if not self.has_finite_mean:
            raise InfiniteMeanError(f"{self} has no finite mean; lambda is undefined")
        if float(self.sf(x)) < _SF_FLOOR:
            raise DegeneracyError(
                f"survival probability at x={x} is below {_SF_FLOOR}; "
                "lambda(x) is numerically degenerate this far out"
            )
        if x <= self.x0:
            raise DomainError(f"x={x} lies at or below the support of {self}")
        return 1.0 / self.alpha


@dataclass(frozen=True)
class Frechet(Distribution):
    """Frechet (inverse-Weibull) with shape ``alpha``: ``F(x) = exp(-x**-alpha)``.

    Its survival function is regularly varying with index ``-alpha``, so the
    inequality curve is not constant but converges to ``1/alpha`` in the
    tail.  The mean is ``Gamma(1 - 1/alpha)``, finite only for ``alpha > 1``.
    """

    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _positive_param(self.alpha, "alpha"))

    def pdf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        pos = np.maximum(arr, _TINY)
        with np.errstate(over="ignore"):
            logpdf = (
                math.log(self.alpha)
                - (self.alpha + 1.0) * np.log(pos)
                - pos**-self.alpha
            )
            val = np.exp(logpdf)
        val = np.where(arr > 0.0, val, 0.0)
        return float(val) if scalar else val

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        pos = np.maximum(arr, _TINY)
        with np.errstate(over="ignore"):
            val = np.exp(-(pos**-self.alpha))
        val = np.where(arr > 0.0, val, 0.0)
        return float(val) if scalar else val

    def sf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        pos = np.maximum(arr, _TINY)
        with np.errstate(over="ignore"):
            val = -np.expm1(-(pos**-self.alpha))
        val = np.where(arr > 0.0, val, 1.0)
        return float(val) if scalar else val

    def quantile(self, p):
        arr, scalar = _as_float_array(p)
        if not np.all((arr > 0.0) & (arr < 1.0)):
            raise DomainError("p must lie strictly in (0, 1)")
        val = (-np.log(arr)) ** (-1.0 / self.alpha)
        return float(val) if scalar else val

    def mean(self) -> float:
        if self.alpha <= 1.0:
            raise InfiniteMeanError(f"{self} has alpha <= 1, so E[X] diverges")
        return math.gamma(1.0 - 1.0 / self.alpha)

    @property
    def support_min(self) -> float:
        return 0.0

    @property
    def tail_index(self) -> float:
        return self.alpha

    @property
    def has_finite_mean(self) -> bool:
        return self.alpha > 1.0

    def spec_string(self) -> str:
        return f"frechet:{f17(self.alpha)}"


@dataclass(frozen=True)
class LogNormal(Distribution):
    """Log-normal with parameters ``mu`` and ``sigma`` of ``log X``.

    All moments are finite and the survival function is not regularly
    varying, so the inequality curve has no power-tail limit.  Serves as the
    control family for the tail diagnostics.
    """

    mu: float
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "mu", _finite_param(self.mu, "mu"))
        object.__setattr__(self, "sigma", _positive_param(self.sigma, "sigma"))

    def _z(self, pos: np.ndarray) -> np.ndarray:
        return (np.log(pos) - self.mu) / self.sigma

    def pdf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        pos = np.maximum(arr, _TINY)
        z = self._z(pos)
        logpdf = -0.5 * z * z - np.log(pos * self.sigma * math.sqrt(2.0 * math.pi))
        val = np.where(arr > 0.0, np.exp(logpdf), 0.0)
        return float(val) if scalar else val

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        pos = np.maximum(arr, _TINY)
        val = np.where(arr > 0.0, ndtr(self._z(pos)), 0.0)
        return float(val) if scalar else val

    def sf(self, x):
        arr, scalar = _as_float_array(x)
        _require_finite(arr, "x")
        pos = np.maximum(arr, _TINY)
        val = np.where(arr > 0.0, ndtr(-self._z(pos)), 1.0)
        return float(val) if scalar else val

    def quantile(self, p):
        arr, scalar = _as_float_array(p)
        if not np.all((arr > 0.0) & (arr < 1.0)):
            raise DomainError("p must lie strictly in (0, 1)")
        val = np.exp(self.mu + self.sigma * ndtri(arr))
        return float(val) if scalar else val

    def mean(self) -> float:
        return math.exp(self.mu + 0.5 * self.sigma**2)

    @property
    def support_min(self) -> float:
        return 0.0

    @property
    def tail_index(self) -> None:
        return None

    @property
    def has_finite_mean(self) -> bool:
        return True

    def spec_string(self) -> str:
        return f"lognormal:{f17(self.mu)},{f17(self.sigma)}"


_FAMILY_ARITY = {"pareto": 2, "frechet": 1, "lognormal": 2}


def parse_distribution(text: str) -> Distribution:
    """Parse a compact spec string into a distribution.

    Accepted forms: ``pareto:ALPHA,X0``, ``frechet:ALPHA``,
    ``lognormal:MU,SIGMA``.  Raises :class:`DomainError` on anything else.
    """
    if not isinstance(text, str):
        raise DomainError(f"distribution spec must be a string, got {type(text).__name__}")
    cleaned = text.strip().lower()
    name, sep, argtext = cleaned.partition(":")
    name = name.strip()
    if not sep or name not in _FAMILY_ARITY:
        known = ", ".join(sorted(_FAMILY_ARITY))
        raise DomainError(f"cannot parse distribution {text!r}; known families: {known}")
    parts = [piece.strip() for piece in argtext.split(",")]
    if len(parts) != _FAMILY_ARITY[name] or any(not piece for piece in parts):
        raise DomainError(
            f"family {name!r} takes {_FAMILY_ARITY[name]} parameter(s), got {argtext!r}"
        )
    try:
        args = [float(piece) for piece in parts]
    except ValueError as exc:
        raise DomainError(f"cannot parse distribution {text!r}: {exc}") from None
    if name == "pareto":
        return Pareto(args[0], args[1])
    if name == "frechet":
        return Frechet(args[0])
    return LogNormal(args[0], args[1])


def truncate(dist: Distribution, x2: float) -> Pareto:
    """Left-truncate a Pareto at ``x2 > x0``.

    Pareto is closed under left truncation: conditioning ``X > x2`` gives
    ``Pareto(alpha, x2)`` with the same exponent.  Other families are not
    closed under truncation, so they are rejected.
    """
    if not isinstance(dist, Pareto):
        raise UnsupportedFamilyError(
            f"truncation closure only holds for the pareto family, got {dist}"
        )
    x2 = float(x2)
    if not math.isfinite(x2) or x2 <= dist.x0:
        raise DomainError(
            f"truncation point must satisfy x2 > x0 = {f17(dist.x0)}, got {x2}"
        )
    return Pareto(dist.alpha, x2)


def lambda_profile(dist: Distribution, x_grid) -> np.ndarray:
    """Evaluate ``lambda(x)`` on an increasing grid of thresholds.

    For power-tail families the profile approaches ``1/alpha`` as the grid
    extends; for log-normal it keeps drifting.  The caller monitors that
    behaviour; this function only evaluates.
    """
    grid = np.asarray(x_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("x_grid must be a nonempty 1-D array")
    _require_finite(grid, "x_grid")
    if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
        raise DomainError("x_grid must be strictly increasing")
    return np.array([dist.lambda_x(float(x)) for x in grid])
