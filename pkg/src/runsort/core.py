"""Run profiles, exact dyadic indices, entropy, and merge-cost bounds.

Everything downstream (merge policies, oracles, potential accounting) is
built on two primitives defined here:

* the *run profile*, the ordered sequence of run lengths an input array
  decomposes into, and
* the *dyadic index* of a length ``r`` relative to an integer scale ``c``,
  the unique integer ``ell`` with ``c * 2**ell <= r < c * 2**(ell + 1)``.

The index is computed with integer shift-and-compare arithmetic only, never
with floating-point logarithms: merge decisions made from it must be
bit-exact and reproducible across platforms.  The fractional part ``lam``
is float and is used for reporting and bound evaluation only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

__all__ = [
    "MAX_TOTAL",
    "DELTA",
    "RunProfile",
    "LogIndex",
    "BoundKind",
    "Potential",
    "log_index",
    "entropy",
    "upper_bound",
    "phi",
    "run_potential",
]

#: Totals at or above this are rejected so that every cost fits comfortably
#: in 64-bit arithmetic (including the numpy/numba oracle paths).
MAX_TOTAL = 1 << 62

#: Additive slack of the tight adaptive cost bound: 24/5 - log2(5).
DELTA = 24.0 / 5.0 - math.log2(5)

#: Potentials are plain floats; a configuration's potential is the sum of
#: its runs' potentials.
Potential = float


@dataclass(frozen=True)
class RunProfile:
    """An ordered sequence of positive run lengths.

    ``lengths[i]`` is the number of elements in the (i+1)-th run; ``rho``
    is the number of runs and ``total`` the number of elements.
    """

    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        lengths = tuple(self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if not lengths:
            raise ValueError("a run profile needs at least one run")
        for r in lengths:
            if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                raise ValueError(f"run lengths must be positive integers, got {r!r}")
        if sum(lengths) >= MAX_TOTAL:
            raise ValueError("total length must be below 2**62")

    @cached_property
    def rho(self) -> int:
        """Number of runs."""
        return len(self.lengths)

    @cached_property
    def total(self) -> int:
        """Total number of elements, the sum of the run lengths."""
        return sum(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)


@dataclass(frozen=True)
class LogIndex:
    """Exact dyadic index of a length: ``ell = floor(log2(r / c))``.

    ``ell`` may be negative (when ``r < c``).  ``lam`` is the fractional
    part ``log2(r / c) - ell`` in ``[0, 1)``; it is informational and never
    feeds back into merge decisions.
    """

    ell: int
    lam: float


def _ell(r: int, c: int) -> int:
    """floor(log2(r / c)) by integer arithmetic; r >= 1, c >= 1."""
    if r >= c:
        return (r // c).bit_length() - 1
    # Smallest k with r * 2**k >= c, i.e. ceil(log2(c / r)); then ell = -k.
    return -(((c + r - 1) // r - 1).bit_length())


def log_index(r: int, c: int) -> LogIndex:
    """Return the dyadic index of run length ``r`` at scale ``c``.

    The integer part satisfies ``c * 2**ell <= r < c * 2**(ell + 1)``
    exactly.  The fractional part is computed from the mantissa
    ``r / (c * 2**ell)`` in ``[1, 2)``, which both branches form as a
    single correctly-rounded integer division.
    """
    if r < 1 or c < 1:
        raise ValueError(f"need r >= 1 and c >= 1, got r={r}, c={c}")
    ell = _ell(r, c)
    if ell >= 0:
        mant = r / (c << ell)
    else:
        mant = (r << -ell) / c
    return LogIndex(ell, math.log2(mant))


def entropy(profile: RunProfile) -> float:
    """Binary Shannon entropy of the length distribution (r_i / n).

    Always in ``[0, log2(rho)]``; zero for a single run.
    """
    if profile.rho == 1:
        return 0.0
    n = profile.total
    log2n = math.log2(n)
    return sum(r * (log2n - math.log2(r)) for r in profile.lengths) / n


class BoundKind(Enum):
    """Closed-form cost bounds evaluated by :func:`upper_bound`."""

    ENTROPY_LB = "entropy_lb"
    THM32 = "thm32"
    DELTA = "delta"
    LASS = "lass"
    HUFFMAN_LB = "huffman_lb"


def upper_bound(kind: BoundKind, profile: RunProfile, c: int = 1) -> float:
    """Evaluate one of the closed-form merge-cost bounds for a profile.

    * ``THM32``:       n * (H + 3 - frac(log2(n/c))) - rho - 1
    * ``DELTA``:       n * (H + 24/5 - log2(5))
    * ``LASS``:        n * (H + 2)
    * ``ENTROPY_LB``:  n * H
    * ``HUFFMAN_LB``:  max(n, n * H) for rho >= 2, else 0

    ``c`` is consulted only by ``THM32``.
    """
    if not isinstance(kind, BoundKind):
        raise ValueError(f"unknown bound kind: {kind!r}")
    n = profile.total
    h = entropy(profile)
    if kind is BoundKind.THM32:
        if c < 1:
            raise ValueError(f"need c >= 1, got {c}")
        frac = log_index(n, c).lam
        return n * (h + 3.0 - frac) - profile.rho - 1.0
    if kind is BoundKind.DELTA:
        return n * (h + DELTA)
    if kind is BoundKind.LASS:
        return n * (h + 2.0)
    if kind is BoundKind.ENTROPY_LB:
        return n * h
    # HUFFMAN_LB
    if profile.rho < 2:
        return 0.0
    return max(float(n), n * h)


def phi(x: float) -> float:
    """The piecewise-linear potential shape max{(2-5x)/3, 1/2-x, 0}.

    Defined on [0, 1]; non-increasing and convex, with breakpoints at
    x = 1/4 and x = 1/2.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"phi is defined on [0, 1], got {x!r}")
    return max((2.0 - 5.0 * x) / 3.0, 0.5 - x, 0.0)


def run_potential(r: int, c: int, in_stack: bool) -> Potential:
    """Amortisation potential of a single run of length ``r`` at scale ``c``.

    Writing ``r = 2**ell * (1 + frac) * c`` with integer ``ell`` and
    ``frac`` in [0, 1):

    * on the stack:     ``2**ell * phi(frac) * c - ell * r``
    * not yet pushed:   ``2**(ell+1) * c - ell * r``
    """
    if r < 1 or c < 1:
        raise ValueError(f"need r >= 1 and c >= 1, got r={r}, c={c}")
    ell = _ell(r, c)
    scale = math.ldexp(c, ell)  # c * 2**ell
    if in_stack:
        frac = r / scale - 1.0
        return scale * phi(frac) - ell * r
    return 2.0 * scale - ell * r
