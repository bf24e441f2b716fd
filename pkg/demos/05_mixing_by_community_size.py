"""
Mixing per community
====================

With one global ``xi`` a large community catches more of its own vertices'
background edges, so its external share ``mu_l`` falls with its volume:
``mu_l = xi * (1 - W_l / W)``.  The local variant picks ``xi_l`` per
community to make ``mu_l`` flat.
"""

import numpy as np

from abcdgen import GeneratorConfig, generate
from abcdgen.stats import bucket_means, community_mixing, expected_mixing_curve, size_slope

base = dict(n=25_000, gamma=2.5, avg_degree=25, max_degree=1500, beta=1.5,
            min_community=50, max_community=2500, mu=0.2, model="cm", seed=5, skip_write=True)
buckets = [50, 100, 200, 400, 800, 1600, 2501]

for variant in ("global", "local"):
    g = generate(GeneratorConfig(variant=variant, **base).validate())
    pc = community_mixing(g.edges, g.assignment)
    pred = expected_mixing_curve(g.assignment.volumes, g.mixing.xi_per_cluster)
    print(f"{variant} variant: slope of mu_l against size = {size_slope(pc.size, pc.mu):.2e}")
    print("   sizes          count  measured  predicted")
    for (lo, hi, count, got), (*_, want) in zip(bucket_means(pc.size, pc.mu, buckets),
                                               bucket_means(pc.size, pred, buckets)):
        print(f"   [{lo:4d}, {hi:4d})  {count:5d}    {got:.4f}    {want:.4f}")
