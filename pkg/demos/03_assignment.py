"""
Admissible community assignment
===============================

A vertex can join a community only if its expected internal degree fits:
the bound ``x_i`` must be at most ``s - 1``.  Among all assignments that
respect every bound and every community size, one is drawn uniformly.
"""

import itertools
from collections import Counter

import numpy as np

from abcdgen import MixingSpec, assign_communities, compute_bounds

weights = np.array([7, 5, 5, 3, 2, 1, 1, 1])
sizes = np.array([4, 2, 2])
bounds = compute_bounds(weights, sizes, MixingSpec("mu_global", 0.7))
print("weights:", weights)
print("bounds: ", bounds)

rng = np.random.default_rng(3)
a = assign_communities(bounds, sizes, rng, weights=weights)
print("one draw:", a.community_of, "sizes", a.sizes, "volumes", a.volumes)

# count every admissible labeling by brute force
support = [
    labels
    for labels in itertools.product(range(3), repeat=8)
    if all(np.bincount(labels, minlength=3) == sizes)
    and all(bounds[i] <= sizes[labels[i]] - 1 for i in range(8))
]
print(len(support), "admissible assignments")

runs = 20_000
seen = Counter(tuple(assign_communities(bounds, sizes, rng).community_of) for _ in range(runs))
freq = np.array([seen[s] for s in support]) / runs
print(f"empirical frequency per outcome: min {freq.min():.4f}, max {freq.max():.4f}, "
      f"uniform would be {1 / len(support):.4f}")
