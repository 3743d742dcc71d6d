"""Empirical step functions and the sample inequality curve.

Given a sorted positive sample ``X_(1) <= ... <= X_(n)`` with total ``T``:

* ``F_n(x)`` is the usual ecdf with weak inequality, so ties count fully;
* ``Q_n(x)`` is the share of the total carried by observations ``<= x``;
* ``L_n(p)`` is the Lorenz step function: ``sum_{j<=i} X_(j) / T`` on
  ``i/n <= p < (i+1)/n`` and 0 below ``1/n``;
* the curve ordinates are

      lambda_hat_i = 1 - log(1 - L_n(p_i)) / log(1 - p_i),   p_i = i/n,

  computed for ``i = 1..m`` with ``m = n - floor(sqrt(n))``.  The top
  ``floor(sqrt(n))`` order statistics are excluded because there both
  numerator and denominator of the ratio degenerate and the ordinates are
  dominated by noise.

Ties resolve through the partial sums directly: ``lambda_hat_i`` uses the
first ``i`` order statistics even when ``X_(i) = X_(i+1)``, which is the
reading verified against the step-function plug-in on tie-free samples.

Index lookups on the ``i/n`` grid compare doubles with ``<=`` / ``>=``
directly instead of trusting ``floor(p * n)``, so grid points hit their own
index exactly (``0.1 * 500`` rounds above 50, for example).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DataError, DegeneracyError, DomainError
from .formatting import f17

__all__ = [
    "SortedSample",
    "LambdaCurve",
    "ecdf",
    "empirical_q",
    "lorenz",
    "lambda_curve",
    "load_values",
]

# A Lorenz share this close to 1 before the cutoff leaves no usable
# log(1 - L); only conceivable with pathological mass concentration.
_SHARE_CEILING = 1.0 - 1e-15


class SortedSample:
    """A validated positive sample, sorted once at construction.

    Attributes
    ----------
    values : ndarray
        Ascending, finite, strictly positive; read-only.
    total : float
        Sequential sum of values (the last cumulative entry), so partial
        shares ``cumulative[i] / total`` reach exactly 1.0 at the top.
    cumulative : ndarray
        Cumulative sums of ``values``; read-only.
    """

    __slots__ = ("values", "total", "cumulative")

    def __init__(self, values):
        arr = np.asarray(values, dtype=float)
        if arr.ndim != 1:
            raise DataError(f"sample must be 1-D, got shape {arr.shape}")
        if arr.size < 2:
            raise DataError(f"sample needs at least 2 values, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise DataError("sample contains non-finite values")
        if not np.all(arr > 0.0):
            raise DataError("sample contains nonpositive values")
        arr = np.sort(arr)
        # Overflow is detected (and reported) rather than warned about.
        with np.errstate(over="ignore"):
            cum = np.cumsum(arr)
        if not math.isfinite(cum[-1]):
            raise DataError("sample total overflows a double")
        arr.flags.writeable = False
        cum.flags.writeable = False
        self.values = arr
        self.cumulative = cum
        self.total = float(cum[-1])

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"SortedSample(n={self.n}, min={self.values[0]!r}, max={self.values[-1]!r})"


def ecdf(sample: SortedSample, x):
    """Empirical cdf ``F_n(x)`` (scalar or array); ties count fully."""
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError("x must not contain NaN")
    counts = np.searchsorted(sample.values, arr, side="right")
    val = counts / sample.n
    return float(val) if arr.ndim == 0 else val


def empirical_q(sample: SortedSample, x):
    """Empirical incomplete moment share ``Q_n(x) = sum_{X_i <= x} X_i / T``."""
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)):
        raise DomainError("x must not contain NaN")
    idx = np.searchsorted(sample.values, arr, side="right")
    shares = sample.cumulative[np.maximum(idx - 1, 0)] / sample.total
    val = np.where(idx > 0, shares, 0.0)
    return float(val) if arr.ndim == 0 else val


def _grid_floor_index(p: float, n: int) -> int:
    """Largest ``i`` in ``[0, n]`` with ``double(i/n) <= p``.

    Starts from ``floor(p * n)`` and corrects by direct double comparison,
    so no index is gained or lost to the rounding of ``p * n``.
    """
    i = int(math.floor(p * n))
    i = min(max(i, 0), n)
    while i + 1 <= n and (i + 1) / n <= p:
        i += 1
    while i >= 1 and i / n > p:
        i -= 1
    return i


def lorenz(sample: SortedSample, p) -> float:
    """Lorenz step function ``L_n(p)`` for ``p`` strictly inside ``(0, 1)``."""
    p = float(p)
    if not (0.0 < p < 1.0):
        raise DomainError(f"p must lie strictly in (0, 1), got {p}")
    i = _grid_floor_index(p, sample.n)
    if i < 1:
        return 0.0
    return float(sample.cumulative[i - 1] / sample.total)


@dataclass(frozen=True, eq=False)
class LambdaCurve:
    """The empirical inequality curve ``lambda_hat_i`` at ``p_i = i/n``.

    ``p`` and ``values`` cover ``i = 1..m`` with ``m = n - floor(sqrt(n))``.
    """

    p: np.ndarray
    values: np.ndarray
    n: int
    m: int

    def at(self, p):
        """Step-function evaluation at ``p`` (scalar or array).

        Right-continuous in the grid index: returns ``values[i-1]`` for the
        largest ``i`` with ``p_i <= p``, clamped to the first/last ordinate
        outside ``[p_1, p_m]``.
        """
        arr = np.asarray(p, dtype=float)
        if np.any(np.isnan(arr)):
            raise DomainError("p must not contain NaN")
        idx = np.searchsorted(self.p, arr, side="right")
        idx = np.clip(idx, 1, self.m)
        val = self.values[idx - 1]
        return float(val) if arr.ndim == 0 else val

    def to_csv(self) -> str:
        """Serialize as ``p,lambda`` rows at full double precision."""
        lines = ["p,lambda"]
        for pi, li in zip(self.p, self.values):
            lines.append(f"{f17(pi)},{f17(li)}")
        return "\n".join(lines) + "\n"


def lambda_curve(sample: SortedSample) -> LambdaCurve:
    """Compute the empirical inequality curve of a sample.

    Raises :class:`DegeneracyError` if a partial share reaches 1 before the
    cutoff (no usable ``log(1 - L)``).
    """
    n = sample.n
    m = n - math.isqrt(n)
    shares = sample.cumulative[:m] / sample.total
    if np.any(shares >= _SHARE_CEILING):
        raise DegeneracyError(
            "partial sums exhaust the sample total before the cutoff; "
            "the curve is degenerate"
        )
    p = np.arange(1, m + 1) / n
    values = 1.0 - np.log1p(-shares) / np.log1p(-p)
    values.flags.writeable = False
    p.flags.writeable = False
    return LambdaCurve(p=p, values=values, n=n, m=m)


# -- file ingestion ---------------------------------------------------------


def _check_value(v: float, origin: str, lineno: int) -> float:
    if not math.isfinite(v):
        raise DataError(f"{origin}:{lineno}: non-finite value {v!r}")
    if v <= 0.0:
        raise DataError(f"{origin}:{lineno}: nonpositive value {v!r}")
    return v


def _is_comment_or_blank(line: str) -> bool:
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def _load_plain(lines: list[str], origin: str) -> np.ndarray:
    out = []
    for lineno, raw in enumerate(lines, start=1):
        if _is_comment_or_blank(raw):
            continue
        text = raw.strip()
        try:
            v = float(text)
        except ValueError:
            raise DataError(f"{origin}:{lineno}: not a number: {text!r}") from None
        out.append(_check_value(v, origin, lineno))
    if not out:
        raise DataError(f"{origin}: no data rows")
    return np.asarray(out, dtype=float)


def _load_csv(lines: list[str], origin: str, column: str | None) -> np.ndarray:
    header = None
    col_idx = None
    out = []
    for lineno, raw in enumerate(lines, start=1):
        if _is_comment_or_blank(raw):
            continue
        row = next(csv.reader(io.StringIO(raw)))
        if header is None:
            header = [cell.strip() for cell in row]
            if column is None:
                if len(header) != 1:
                    raise DataError(
                        f"{origin}: multiple columns {header}; pass an explicit column name"
                    )
                col_idx = 0
            else:
                if column not in header:
                    raise DataError(
                        f"{origin}: no column {column!r}; available: {header}"
                    )
                col_idx = header.index(column)
            continue
        if len(row) <= col_idx:
            raise DataError(f"{origin}:{lineno}: row has {len(row)} cells, need {col_idx + 1}")
        text = row[col_idx].strip()
        try:
            v = float(text)
        except ValueError:
            raise DataError(f"{origin}:{lineno}: not a number: {text!r}") from None
        out.append(_check_value(v, origin, lineno))
    if header is None:
        raise DataError(f"{origin}: empty file")
    if not out:
        raise DataError(f"{origin}: no data rows")
    return np.asarray(out, dtype=float)


def load_values(path, column: str | None = None) -> np.ndarray:
    """Read positive values from a text or CSV file.

    Plain format: one value per line; blank lines and ``#`` comments are
    skipped.  CSV format: a header row followed by data rows; used when the
    first content line does not parse as a number or when ``column`` is
    given.  Single-column CSV needs no column name.  All parse and range
    errors carry 1-based line numbers.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    lines = text.splitlines()
    origin = str(path)
    if column is not None:
        return _load_csv(lines, origin, column)
    first = next((line for line in lines if not _is_comment_or_blank(line)), None)
    if first is None:
        raise DataError(f"{origin}: no data rows")
    try:
        float(first.strip())
    except ValueError:
        return _load_csv(lines, origin, None)
    return _load_plain(lines, origin)
