"""Chung-Lu variant: fixed edge counts per cluster, then a background fill.

Each graph is drawn by picking both endpoints independently with probability
proportional to their weight and rejecting loops and repeated pairs until the
target edge count is reached.  Background edges also reject pairs already
used by any cluster graph, so the union is always simple.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .assignment import Assignment
from .edgeset import BACKGROUND, EdgeList, edge_keys
from .errors import GenerationError
from .mixing import WeightSplit, randomized_round

log = logging.getLogger(__name__)

REJECTION_FACTOR = 1000
_MAX_BATCH = 1 << 22


class AliasTable:
    """Vose alias table over non-negative weights; O(1) per draw."""

    def __init__(self, weights):
        w = np.asarray(weights, dtype=np.float64)
        k = len(w)
        if k == 0 or not w.sum() > 0:
            raise ValueError("alias table needs at least one positive weight")
        scaled = (w * (k / w.sum())).tolist()
        prob = [1.0] * k
        alias = list(range(k))
        small = [i for i, p in enumerate(scaled) if p < 1.0]
        large = [i for i, p in enumerate(scaled) if p >= 1.0]
        while small and large:
            s = small.pop()
            g = large.pop()
            prob[s] = scaled[s]
            alias[s] = g
            scaled[g] = (scaled[g] + scaled[s]) - 1.0
            (small if scaled[g] < 1.0 else large).append(g)
        # leftovers are 1 up to rounding
        self.prob = np.asarray(prob)
        self.alias = np.asarray(alias, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.prob)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        idx = rng.integers(0, len(self.prob), size)
        keep = rng.random(size) < self.prob[idx]
        return np.where(keep, idx, self.alias[idx])


def _in_sorted(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    if len(sorted_keys) == 0:
        return np.zeros(len(keys), dtype=bool)
    pos = np.searchsorted(sorted_keys, keys)
    pos[pos == len(sorted_keys)] = 0
    return sorted_keys[pos] == keys


def cl_sample_edges(
    vertices,
    weights,
    target_m: int,
    rng: np.random.Generator,
    n: int,
    forbidden=None,
    max_rejections=None,
):
    """Draw exactly ``target_m`` distinct non-loop edges among ``vertices``.

    Endpoints are drawn proportional to ``weights``; a candidate is rejected if
    it is a loop, repeats an accepted edge, or its key is in ``forbidden``
    (a sorted array of :func:`edge_keys`).  Candidates are drawn in batches
    but accepted strictly in draw order, which gives the same law as drawing
    them one at a time.

    Returns ``(u, v)`` arrays of global vertex ids.  Raises
    :class:`GenerationError` after ``max_rejections`` (default
    ``1000 * target_m``) consecutive rejections.
    """
    vertices = np.asarray(vertices, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.float64)
    if target_m <= 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy()
    pos = weights > 0
    vertices, weights = vertices[pos], weights[pos]
    if len(vertices) < 2:
        raise GenerationError(f"cannot place {target_m} edges on {len(vertices)} weighted vertices")
    if forbidden is None:
        forbidden = np.empty(0, dtype=np.int64)
    if max_rejections is None:
        max_rejections = REJECTION_FACTOR * target_m

    table = AliasTable(weights)
    accepted_u, accepted_v = [], []
    accepted_keys = np.empty(0, dtype=np.int64)
    have, streak, rate = 0, 0, 1.0
    while have < target_m:
        need = target_m - have
        batch = min(_MAX_BATCH, int(need / max(rate, 1e-3) * 1.1) + 32)
        a = vertices[table.sample(rng, batch)]
        b = vertices[table.sample(rng, batch)]
        keys = edge_keys(a, b, n)
        ok = (a != b) & ~_in_sorted(forbidden, keys) & ~_in_sorted(accepted_keys, keys)
        idx = np.flatnonzero(ok)
        # first occurrence within the batch, in draw order
        _, first = np.unique(keys[idx], return_index=True)
        idx = np.sort(idx[first])[:need]
        if len(idx):
            last = int(idx[-1])
            streak = batch - 1 - last if len(idx) < need else 0
            rate = max(len(idx) / batch, 1e-3) if len(idx) < need else rate
        else:
            streak += batch
            rate = max(rate / 4, 1e-3)
        if streak >= max_rejections:
            raise GenerationError(
                f"gave up after {streak} consecutive rejections with {have}/{target_m} edges placed"
            )
        if len(idx):
            accepted_u.append(a[idx])
            accepted_v.append(b[idx])
            accepted_keys = np.union1d(accepted_keys, keys[idx])
            have += len(idx)
    return np.concatenate(accepted_u), np.concatenate(accepted_v)


@dataclass
class CLReport:
    cluster_edges: int = 0
    background_edges: int = 0


def cl_generate(split: WeightSplit, assignment: Assignment, rng_clusters, rng_background=None):
    """Build the full Chung-Lu graph.

    Returns ``(EdgeList, CLReport)``.
    """
    rng_background = rng_clusters if rng_background is None else rng_background
    n = assignment.n
    parts = []
    cluster_total = 0
    for c, members in enumerate(assignment.members):
        y = split.y[members]
        e_c = randomized_round(0.5 * float(y.sum()), rng_clusters)
        u, v = cl_sample_edges(members, y, e_c, rng_clusters, n)
        parts.append((u, v, c))
        cluster_total += e_c

    w_total = int(round(float(np.sum(split.y) + np.sum(split.z))))
    half = w_total // 2 if w_total % 2 == 0 else randomized_round(w_total / 2, rng_background)
    # with no background weight at all the background graph is empty by definition
    e_bg = half - cluster_total if np.any(split.z > 0) else 0
    if e_bg < 0:
        raise GenerationError(f"cluster graphs used {cluster_total} edges, more than the total {half}")
    forbidden = np.sort(np.concatenate([edge_keys(u, v, n) for u, v, _ in parts])) if parts else None
    u, v = cl_sample_edges(np.arange(n), split.z, e_bg, rng_background, n, forbidden=forbidden)
    parts.append((u, v, BACKGROUND))
    log.debug("chung-lu: %d cluster edges, %d background edges", cluster_total, e_bg)
    return EdgeList.concat(n, parts), CLReport(cluster_edges=cluster_total, background_edges=e_bg)
