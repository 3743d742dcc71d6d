"""Tiny deterministic SVG line charts.

The output is a pure function of the inputs: fixed layout, fixed palette,
no timestamps or generator metadata, so rendering the same data twice gives
byte-identical files.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .formatting import f4

__all__ = ["line_chart"]

_PALETTE = ("#000000", "#c02020", "#2040c0", "#208040", "#806010", "#802080")

_MARGIN_LEFT = 64.0
_MARGIN_RIGHT = 16.0
_MARGIN_TOP = 36.0
_MARGIN_BOTTOM = 52.0


def _px(value: float) -> str:
    return format(value, ".2f")


def _as_series(x, ys) -> tuple[np.ndarray, list[np.ndarray]]:
    xa = np.asarray(x, dtype=float)
    if xa.ndim != 1 or xa.size < 2:
        raise DomainError("x must be a 1-D array with at least 2 points")
    if not np.all(np.isfinite(xa)):
        raise DomainError("x must be finite")
    if isinstance(ys, np.ndarray) and ys.ndim == 1:
        ys = [ys]
    elif isinstance(ys, (list, tuple)) and ys and np.isscalar(ys[0]):
        ys = [np.asarray(ys, dtype=float)]
    series = [np.asarray(y, dtype=float) for y in ys]
    if not series:
        raise DomainError("need at least one series")
    for y in series:
        if y.shape != xa.shape:
            raise DomainError(f"series shape {y.shape} does not match x shape {xa.shape}")
        if not np.all(np.isfinite(y)):
            raise DomainError("series values must be finite")
    return xa, series


def _axis_range(lo: float, hi: float) -> tuple[float, float]:
    if hi <= lo:
        return lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def line_chart(
    x,
    ys,
    labels: tuple[str, ...] | None = None,
    ref_y: float | None = None,
    x_label: str = "",
    y_label: str = "",
    title: str | None = None,
    width: int = 640,
    height: int = 440,
) -> str:
    """Render one or more series over a shared ``x`` grid as an SVG string.

    ``ys`` is one array or a sequence of arrays matching ``x``.  ``ref_y``
    draws a dashed horizontal reference line.
    """
    xa, series = _as_series(x, ys)
    if labels is not None and len(labels) != len(series):
        raise DomainError("labels must match the number of series")
    if ref_y is not None and not math.isfinite(float(ref_y)):
        raise DomainError("ref_y must be finite")

    x_lo, x_hi = _axis_range(float(xa.min()), float(xa.max()))
    y_all = [float(y.min()) for y in series] + [float(y.max()) for y in series]
    if ref_y is not None:
        y_all.append(float(ref_y))
    y_lo, y_hi = _axis_range(min(y_all), max(y_all))

    plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = height - _MARGIN_TOP - _MARGIN_BOTTOM

    def sx(v: float) -> float:
        return _MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v: float) -> float:
        return _MARGIN_TOP + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<rect x="{_px(_MARGIN_LEFT)}" y="{_px(_MARGIN_TOP)}" width="{_px(plot_w)}" '
        f'height="{_px(plot_h)}" fill="none" stroke="#000000" stroke-width="1"/>',
    ]

    for i in range(5):
        frac = i / 4.0
        xv = x_lo + frac * (x_hi - x_lo)
        yv = y_lo + frac * (y_hi - y_lo)
        xp, yp = sx(xv), sy(yv)
        parts.append(
            f'<line x1="{_px(xp)}" y1="{_px(_MARGIN_TOP + plot_h)}" x2="{_px(xp)}" '
            f'y2="{_px(_MARGIN_TOP + plot_h + 5)}" stroke="#000000" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_px(xp)}" y="{_px(_MARGIN_TOP + plot_h + 20)}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{f4(xv)}</text>'
        )
        parts.append(
            f'<line x1="{_px(_MARGIN_LEFT - 5)}" y1="{_px(yp)}" x2="{_px(_MARGIN_LEFT)}" '
            f'y2="{_px(yp)}" stroke="#000000" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_px(_MARGIN_LEFT - 8)}" y="{_px(yp + 4)}" font-family="monospace" '
            f'font-size="11" text-anchor="end">{f4(yv)}</text>'
        )

    if ref_y is not None:
        rp = sy(float(ref_y))
        parts.append(
            f'<line x1="{_px(_MARGIN_LEFT)}" y1="{_px(rp)}" '
            f'x2="{_px(_MARGIN_LEFT + plot_w)}" y2="{_px(rp)}" '
            f'stroke="#606060" stroke-width="1" stroke-dasharray="6,4"/>'
        )

    for si, y in enumerate(series):
        color = _PALETTE[si % len(_PALETTE)]
        points = " ".join(f"{_px(sx(xv))},{_px(sy(yv))}" for xv, yv in zip(xa, y))
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )

    if labels is not None:
        for si, label in enumerate(labels):
            color = _PALETTE[si % len(_PALETTE)]
            ty = _MARGIN_TOP + 16 + 16 * si
            parts.append(
                f'<text x="{_px(_MARGIN_LEFT + plot_w - 8)}" y="{_px(ty)}" '
                f'font-family="monospace" font-size="12" text-anchor="end" '
                f'fill="{color}">{label}</text>'
            )

    if title:
        parts.append(
            f'<text x="{_px(width / 2)}" y="20" font-family="monospace" font-size="13" '
            f'text-anchor="middle">{title}</text>'
        )
    if x_label:
        parts.append(
            f'<text x="{_px(_MARGIN_LEFT + plot_w / 2)}" y="{_px(height - 14)}" '
            f'font-family="monospace" font-size="12" text-anchor="middle">{x_label}</text>'
        )
    if y_label:
        yc = _MARGIN_TOP + plot_h / 2
        parts.append(
            f'<text x="16" y="{_px(yc)}" font-family="monospace" font-size="12" '
            f'text-anchor="middle" transform="rotate(-90 16 {_px(yc)})">{y_label}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
