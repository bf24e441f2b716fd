"""
From a target mixing level to per-vertex weight splits
======================================================

The user asks for ``mu``, the fraction of edges between communities.  The
generator works with ``xi``, the share of each vertex's weight that goes to
the community-agnostic background graph.  Even with ``xi = 1`` a random
edge lands inside a community with probability ``sum (W_l/W)**2``, so
``mu = xi * mu0``.
"""

import numpy as np

from abcdgen import MixingSpec, compute_phi, randomized_round, resolve_mixing, split_weights
from abcdgen.mixing import mixing_thresholds

volumes = np.array([500.0, 300.0, 200.0])
mu0, mu1 = mixing_thresholds(volumes)
print(f"mu0={mu0:.3f} (global ceiling), mu1={mu1:.3f} (local ceiling)")

glob = resolve_mixing(MixingSpec("mu_global", 0.2), volumes)
local = resolve_mixing(MixingSpec("mu_local", 0.2), volumes)
print("global xi per community:", glob.xi_per_cluster.round(4))
print("local xi per community: ", local.xi_per_cluster.round(4))

# above the ceiling communities would be sparser inside than outside
try:
    resolve_mixing(MixingSpec("mu_global", 0.7), volumes)
except Exception as exc:
    print(type(exc).__name__ + ":", exc)

# phi plays the same role for community sizes when xi is given directly
print("phi for sizes (3, 2, 1):", round(compute_phi([3, 2, 1]), 4))

# randomized rounding keeps expectations exact
rng = np.random.default_rng(0)
print("mean of 100k roundings of 2.25:", randomized_round(np.full(100_000, 2.25), rng).mean())

# integer split: every community's internal total must be even
w = np.array([8, 4, 7, 5, 3])
comm = np.array([0, 0, 1, 1, 1])
split = split_weights(w, comm, [0.6, 0.3], integer_mode=True, rng=rng)
print("real internal weights:", split.y.round(2))
print("integer internal:     ", split.y_int, "leaders", split.leaders)
print("community totals:     ", np.bincount(comm, weights=split.y_int).astype(int))
