"""Vertex-to-community assignment.

Vertices are placed in non-increasing order of their internal-degree bound.
Each vertex picks a community whose size exceeds its bound, with probability
proportional to the free spots left there.  Every admissible assignment is
produced with the same probability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InfeasibleError
from .mixing import MixingSpec, compute_phi
from .streams import UniformBuffer

# absorbs float error in (1 - a) * w before taking the ceiling
_CEIL_TOL = 1e-9


@dataclass
class Assignment:
    """Community of every vertex (0-based ids internally; files are 1-based).

    ``weights`` is optional; without it ``volumes`` counts vertices.
    """

    community_of: np.ndarray
    num_communities: int
    weights: Optional[np.ndarray] = None
    _members: Optional[list] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.community_of)

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.community_of, minlength=self.num_communities)

    @property
    def volumes(self) -> np.ndarray:
        w = None if self.weights is None else np.asarray(self.weights, dtype=np.float64)
        return np.bincount(self.community_of, weights=w, minlength=self.num_communities)

    @property
    def members(self) -> list:
        """Sorted vertex ids of each community."""
        if self._members is None:
            order = np.argsort(self.community_of, kind="stable")
            cuts = np.cumsum(self.sizes)[:-1]
            self._members = np.split(order, cuts)
        return self._members


def compute_bounds(weights, sizes, mixing: MixingSpec) -> np.ndarray:
    """Upper bound on each vertex's internal degree, used for admissibility.

    With ``xi`` given the bound is ``ceil((1 - xi*phi) * w)``; with ``mu``
    given (either variant) it is ``ceil((1 - mu) * w)`` because ``xi`` is not
    known before the assignment exists.
    """
    w = np.asarray(weights, dtype=np.float64)
    if mixing.uses_mu:
        factor = 1.0 - mixing.value
    else:
        factor = 1.0 - mixing.value * compute_phi(sizes)
    raw = factor * w
    return np.ceil(raw - _CEIL_TOL * np.maximum(raw, 1.0)).astype(np.int64)


class _Fenwick:
    """Prefix sums over community free-spot counts."""

    def __init__(self, values):
        self.n = len(values)
        self.tree = [0] * (self.n + 1)
        for i, v in enumerate(values, start=1):
            self.tree[i] += v
            j = i + (i & -i)
            if j <= self.n:
                self.tree[j] += self.tree[i]
        self._top = 1 << self.n.bit_length()

    def add(self, i: int, delta: int) -> None:
        i += 1
        tree = self.tree
        while i <= self.n:
            tree[i] += delta
            i += i & -i

    def prefix(self, count: int) -> int:
        s = 0
        tree = self.tree
        i = count
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    def find(self, r: int) -> int:
        """Smallest index whose inclusive prefix sum exceeds ``r``."""
        pos = 0
        step = self._top
        tree = self.tree
        while step:
            nxt = pos + step
            if nxt <= self.n and tree[nxt] <= r:
                pos = nxt
                r -= tree[nxt]
            step >>= 1
        return pos


def eligible_counts(bounds, sizes) -> np.ndarray:
    """Number of (largest-first) communities each vertex may join: ``x_i <= s_j - 1``."""
    s = np.asarray(sizes)
    # s is non-increasing: count of s_j > x_i
    return np.searchsorted(-s, -np.asarray(bounds), side="left")


def assign_communities(bounds, sizes, rng: np.random.Generator, weights=None) -> Assignment:
    """Sample an admissible assignment uniformly at random.

    ``bounds`` must be aligned with vertex ids and non-increasing; ``sizes``
    must be non-increasing.  Community ``j`` of the result is the community
    of size ``sizes[j]``.
    """
    x = np.asarray(bounds, dtype=np.int64)
    s = np.asarray(sizes, dtype=np.int64)
    n, k = len(x), len(s)
    if int(s.sum()) != n:
        raise ValueError(f"community sizes sum to {int(s.sum())}, expected n={n}")
    if np.any(np.diff(x) > 0) or np.any(np.diff(s) > 0):
        raise ValueError("bounds and sizes must both be sorted non-increasing")

    t = eligible_counts(x, s)
    capacity = np.cumsum(s)
    # vertex i (0-based) needs a free spot among the first t_i communities
    avail = np.where(t > 0, capacity[np.maximum(t - 1, 0)], 0) - np.arange(n)
    short = np.flatnonzero(avail <= 0)
    if short.size:
        i = int(short[0])
        raise InfeasibleError(
            f"no admissible assignment: vertex {i + 1} has internal-degree bound {x[i]} "
            f"but only {max(int(avail[i]), 0)} spots remain in communities larger than it"
        )

    community_of = np.empty(n, dtype=np.int64)
    free = s.copy()
    constrained = int(np.searchsorted(t, k, side="left"))
    if constrained:
        tree = _Fenwick(free.tolist())
        unif = UniformBuffer(rng, block=min(4096, constrained))
        for i, ti in enumerate(t[:constrained].tolist()):
            total = tree.prefix(ti)
            j = tree.find(unif.below(total))
            community_of[i] = j
            tree.add(j, -1)
        free -= np.bincount(community_of[:constrained], minlength=k)
    # every community is eligible for the rest: a uniform shuffle of the free spots
    rest = np.repeat(np.arange(k, dtype=np.int64), free)
    rng.shuffle(rest)
    community_of[constrained:] = rest
    return Assignment(community_of=community_of, num_communities=k, weights=weights)
