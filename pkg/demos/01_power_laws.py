"""
Degree and community-size sequences
===================================

Both sequences come from truncated discrete power laws.  Degrees must have
an even sum; community sizes must add up to the number of vertices.
"""

import numpy as np

from abcdgen import PowerLawSpec, generate_community_sizes, generate_degree_sequence, resolve_min_degree

rng = np.random.default_rng(42)

# the law itself: mass proportional to x**-gamma on lo..hi
spec = PowerLawSpec(exponent=2.5, lo=5, hi=50)
print("P(5), P(6), P(50):", spec.pmf()[[0, 1, -1]].round(4))
print("mean of the law:", round(spec.mean(), 3))

# 10,000 degrees, sorted largest first, even total
w = generate_degree_sequence(10_000, spec, rng)
print("degrees:", w[:5], "...", w[-5:], "sum", w.sum(), "(even)")
print("sample mean:", w.mean().round(3))

# asking for an average degree instead of a minimum
w_min = resolve_min_degree(target_avg=25, w_max=500, exponent=2.5)
print("minimum degree giving an average of 25 with max 500:", w_min)
print("achieved mean of that law:", round(PowerLawSpec(2.5, w_min, 500).mean(), 3))

# community sizes between 50 and 1000 summing to n
s = generate_community_sizes(10_000, PowerLawSpec(1.5, 50, 1000), rng)
print(len(s), "communities, sizes", s[:5], "...", s[-3:], "total", s.sum())

# some ranges cannot add up to n at all
try:
    generate_community_sizes(11, PowerLawSpec(1.5, 6, 10), rng)
except Exception as exc:
    print(type(exc).__name__ + ":", exc)
