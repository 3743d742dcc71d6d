"""Exception hierarchy for the zenga package.

All library errors derive from :class:`ZengaError` so callers can catch one
base class.  The three leaf categories mirror the failure modes a caller can
act on: bad arguments or configuration (:class:`DomainError` and its
subclasses), bad input data (:class:`DataError`), and numeric degeneracy
discovered at run time (:class:`DegeneracyError`).
"""


class ZengaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZengaError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class UnsupportedFamilyError(DomainError):
    """An operation was asked for a distribution family it does not support."""


class InfiniteMeanError(DomainError):
    """A computation needs a finite first moment and the family has none."""


class DataError(ZengaError):
    """Input data is malformed or violates sample requirements."""


class DegeneracyError(ZengaError):
    """A numeric procedure degenerated: exhausted budget, saturated tail,
    or a sample with no dispersion."""
