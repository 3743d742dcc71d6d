"""Deterministic random-number plumbing.

Reproducibility contract
------------------------
Every stochastic routine in this package takes an explicit 64-bit integer
seed and owns its randomness end to end:

* Child seeds for replications are derived with SplitMix64: the *i*-th child
  of ``seed`` is the *i*-th output of a SplitMix64 generator initialised at
  ``seed``.  SplitMix64 is a public, well-specified integer hash, so the
  sub-stream layout is documented by its reference definition and any other
  implementation can reproduce it.
* Uniform variates come from numpy's PCG64 bit generator seeded with the
  (child) seed; ``Generator.random`` yields doubles on ``[0, 1)``.  An exact
  0.0 (probability 2**-53 per draw) is clamped to 2**-64 so that downstream
  inverse-transform sampling always receives values in the open interval
  ``(0, 1)``.

Given the same seed the produced arrays are bitwise identical across runs,
platforms with IEEE-754 doubles, and any parallelism settings, because each
replication's stream depends only on ``(seed, replication_index)``.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

__all__ = ["child_seed", "splitmix64", "uniform_open", "validate_seed"]

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# Smallest uniform handed to inverse transforms; keeps (0, 1) open while
# staying far below the 2**-53 resolution of Generator.random.
MIN_UNIFORM = 2.0**-64


def validate_seed(seed: int) -> int:
    """Check that ``seed`` is an integer in ``[0, 2**64)`` and return it."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise DomainError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed < (1 << 64):
        raise DomainError(f"seed must be in [0, 2**64), got {seed}")
    return seed


def _mix(z: int) -> int:
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return z


def splitmix64(seed: int, index: int) -> int:
    """Return the ``index``-th output of a SplitMix64 stream seeded at ``seed``.

    Matches the reference implementation: the state advances by the odd
    constant 0x9E3779B97F4A7C15 before each output is mixed.
    """
    seed = validate_seed(seed)
    if not isinstance(index, (int, np.integer)) or isinstance(index, bool):
        raise DomainError(f"index must be an integer, got {type(index).__name__}")
    index = int(index)
    if index < 0:
        raise DomainError(f"index must be nonnegative, got {index}")
    state = (seed + (index + 1) * _GAMMA) & _MASK64
    return _mix(state)


def child_seed(seed: int, index: int) -> int:
    """Derive the seed for replication ``index`` from a parent ``seed``."""
    return splitmix64(seed, index)


def uniform_open(seed: int, n: int) -> np.ndarray:
    """Draw ``n`` uniforms on the open interval ``(0, 1)``.

    The stream is PCG64 seeded with ``seed``; exact zeros are clamped to
    ``MIN_UNIFORM``.
    """
    seed = validate_seed(seed)
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or int(n) < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    gen = np.random.Generator(np.random.PCG64(seed))
    u = gen.random(int(n))
    return np.maximum(u, MIN_UNIFORM)
