"""Truncated discrete power laws, degree sequences and community sizes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, InfeasibleError

DEFAULT_MAX_ITERS = 100


@dataclass(frozen=True)
class PowerLawSpec:
    """Discrete power law on the integers ``lo..hi`` with mass proportional to ``x**-exponent``."""

    exponent: float
    lo: int
    hi: int

    def __post_init__(self):
        # any exponent is proper on a finite range; >= 1 keeps the heavy-tail shape
        if not self.exponent >= 1:
            raise ConfigError(f"power-law exponent must be >= 1, got {self.exponent}")
        if self.lo < 1:
            raise ConfigError(f"power-law lower bound must be a positive integer, got {self.lo}")
        if self.lo > self.hi:
            raise ConfigError(f"power-law range is empty: lo={self.lo} > hi={self.hi}")

    def support(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def pmf(self) -> np.ndarray:
        mass = self.support().astype(np.float64) ** -self.exponent
        return mass / mass.sum()

    def mean(self) -> float:
        x = self.support().astype(np.float64)
        mass = x ** -self.exponent
        return float(np.dot(x, mass) / mass.sum())


class PowerLawSampler:
    """Inverse-CDF sampler over a precomputed cumulative table."""

    def __init__(self, spec: PowerLawSpec):
        self.spec = spec
        cdf = np.cumsum(spec.pmf())
        cdf[-1] = 1.0
        self._cdf = cdf

    def sample(self, rng: np.random.Generator, size=None):
        u = rng.random(size)
        idx = np.searchsorted(self._cdf, u, side="right")
        if size is None:
            return int(self.spec.lo + idx)
        return self.spec.lo + idx.astype(np.int64)


def sample_power_law(spec: PowerLawSpec, rng: np.random.Generator) -> int:
    """Draw one value from the truncated discrete power law."""
    return PowerLawSampler(spec).sample(rng)


def generate_degree_sequence(
    n: int, spec: PowerLawSpec, rng: np.random.Generator, max_iters: int = DEFAULT_MAX_ITERS
) -> np.ndarray:
    """Sample ``n`` degrees with an even sum, sorted non-increasing.

    The whole sequence is resampled up to ``max_iters`` times until its sum
    is even.  If every attempt is odd, the largest value of the last attempt
    is decreased by one.
    """
    if n < 1:
        raise ConfigError(f"n must be positive, got {n}")
    sampler = PowerLawSampler(spec)
    w = None
    for _ in range(max(1, max_iters)):
        w = sampler.sample(rng, n)
        if w.sum() % 2 == 0:
            break
    else:
        w[np.argmax(w)] -= 1
    return np.sort(w)[::-1].copy()


def _truncated_means(hi: int, exponent: float) -> np.ndarray:
    """``out[m-1]`` is the mean of the power law restricted to ``[m, hi]``."""
    x = np.arange(1, hi + 1, dtype=np.float64)
    mass = x ** -exponent
    num = np.cumsum((x * mass)[::-1])[::-1]
    den = np.cumsum(mass[::-1])[::-1]
    return num / den


def resolve_min_degree(target_avg: float, w_max: int, exponent: float) -> int:
    """Smallest-distance integer lower bound whose truncated mean matches ``target_avg``.

    Ties are broken toward the smaller bound.
    """
    if target_avg > w_max:
        raise ConfigError(
            f"average degree {target_avg} cannot be reached with maximum degree {w_max}"
        )
    means = _truncated_means(int(w_max), exponent)
    return int(np.argmin(np.abs(means - target_avg))) + 1


def generate_community_sizes(
    n: int, spec: PowerLawSpec, rng: np.random.Generator, max_iters: int = DEFAULT_MAX_ITERS
) -> np.ndarray:
    """Sample community sizes summing exactly to ``n``, sorted non-increasing.

    Each attempt draws sizes until the running total reaches ``n``.  An exact
    hit is returned at once; otherwise the attempt with the smallest
    overshoot is truncated if it has too many elements, and its elements are
    nudged by one in a shuffled cyclic order until the total equals ``n``.
    """
    lo, hi = spec.lo, spec.hi
    if n < 1:
        raise ConfigError(f"n must be positive, got {n}")
    if lo > n:
        raise InfeasibleError(f"minimum community size {lo} exceeds n={n}")
    # some count k must satisfy k*lo <= n <= k*hi
    k_min, k_max = -(-n // hi), n // lo
    if k_min > k_max:
        raise InfeasibleError(
            f"no list of community sizes in [{lo}, {hi}] sums to n={n}"
        )

    sampler = PowerLawSampler(spec)
    batch = k_max + 1
    best, best_total = None, None
    for _ in range(max(1, max_iters)):
        draws = sampler.sample(rng, batch)
        totals = np.cumsum(draws)
        stop = int(np.searchsorted(totals, n, side="left"))
        sizes, total = draws[: stop + 1], int(totals[stop])
        if total == n:
            return np.sort(sizes)[::-1].copy()
        if best_total is None or total < best_total:
            best, best_total = sizes, total

    sizes = best.tolist()
    total = best_total
    while len(sizes) > k_max:
        total -= sizes.pop()
    if not (len(sizes) * lo <= n <= len(sizes) * hi):
        raise InfeasibleError(f"cannot adjust {len(sizes)} community sizes to sum to n={n}")

    order = rng.permutation(len(sizes))
    pos = 0
    while total != n:
        i = order[pos]
        pos = (pos + 1) % len(order)
        if total > n and sizes[i] > lo:
            sizes[i] -= 1
            total -= 1
        elif total < n and sizes[i] < hi:
            sizes[i] += 1
            total += 1
    return np.sort(np.asarray(sizes, dtype=np.int64))[::-1].copy()

