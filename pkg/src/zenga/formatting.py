"""Text formatting shared by serializers and the CLI.

Machine-readable output (CSV, value files) uses 17 significant digits so
doubles round-trip exactly; human-facing summaries use 4.
"""

from __future__ import annotations

__all__ = ["f17", "f4", "fbool", "fcell"]


def f17(x: float) -> str:
    """Format a float with full round-trip precision."""
    return format(float(x), ".17g")


def f4(x: float) -> str:
    """Format a float for human-facing summaries."""
    return format(float(x), ".4g")


def fbool(flag: bool) -> str:
    return "true" if flag else "false"


def fcell(value) -> str:
    """Format one CSV cell: floats at 17 digits, ints plain, None as ``na``."""
    if value is None:
        return "na"
    if isinstance(value, bool):
        return fbool(value)
    if isinstance(value, int):
        return str(value)
    return f17(value)
