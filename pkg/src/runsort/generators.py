"""Reproducible inputs: adversarial run-length families and seeded randomness.

All randomness in the project flows through :class:`SplitMix64`, pinned to
the published constants so that a given seed produces the same stream on
every platform and in every language with 64-bit integers.
"""

from __future__ import annotations

from typing import Sequence

from .core import RunProfile

__all__ = [
    "SplitMix64",
    "gen_augss_quadratic",
    "gen_delta_family",
    "gen_three_run",
    "gen_random",
    "gen_array_from_profile",
]

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood constants).

    state += 0x9E3779B97F4A7C15
    z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
    z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31

    ``below(k)`` reduces an output modulo ``k``; for the desk-scale bounds
    used here (k far below 2**48) the modulo bias is negligible and the
    mapping is fully determined by the seed, which is what matters for
    reproducibility.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next(self) -> int:
        """Next 64-bit output."""
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound)."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next() % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        return lo + self.below(hi - lo + 1)


def gen_augss_quadratic(k: int) -> RunProfile:
    """The (3, 1)-repeated family that drives AugmentedShiversSort quadratic.

    ``k`` copies of (3, 1); total length n = 4k.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return RunProfile((3, 1) * k)


def gen_delta_family(k: int, c: int = 1) -> RunProfile:
    """The 7-run family exhibiting the additive-slack lower bound.

    With m = 2**k * c the profile is (1, 2m-4, 1, m+1, 1, 2m+1, 1), total
    n = 5m + 2.  Requires k >= 2 so that 2m - 4 is positive.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    m = (1 << k) * c
    return RunProfile((1, 2 * m - 4, 1, m + 1, 1, 2 * m + 1, 1))


def gen_three_run(n: int) -> RunProfile:
    """The (2, n-4, 2) family whose optimal stable cost is 2n - 2."""
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    return RunProfile((2, n - 4, 2))


def gen_random(rho_max: int, r_max: int, seed: int) -> RunProfile:
    """Seeded random profile: rho in [1, rho_max], each length in [1, r_max]."""
    if rho_max < 1 or r_max < 1:
        raise ValueError("rho_max and r_max must be >= 1")
    rng = SplitMix64(seed)
    rho = 1 + rng.below(rho_max)
    return RunProfile(tuple(1 + rng.below(r_max) for _ in range(rho)))


def gen_array_from_profile(profile: RunProfile, seed: int) -> list[int]:
    """Build an integer-key array whose greedy decomposition is ``profile``.

    Each run is emitted non-decreasing (random steps of 0 or 1) and every
    run boundary is a strict key drop of exactly 1, so the greedy decomposer
    can neither split a run nor fuse two adjacent ones.

    A greedy run that is not the last one always absorbs at least two
    elements (its direction is decided by its first two), so profiles with
    an interior run of length 1 are not realisable by any array and are
    rejected.
    """
    lengths = profile.lengths
    for r in lengths[:-1]:
        if r < 2:
            raise ValueError(
                "profiles with an interior run of length 1 cannot be produced "
                "by the greedy run decomposition"
            )
    rng = SplitMix64(seed)
    keys: list[int] = []
    key = 0
    for r in lengths:
        keys.append(key)
        for _ in range(r - 1):
            key += rng.below(2)
            keys.append(key)
        key -= 1  # strict drop opens the next run
    return keys
