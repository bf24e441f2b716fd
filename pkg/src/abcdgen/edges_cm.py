"""Configuration-model variant with switching-based conflict resolution.

Every cluster graph is a uniform random pairing of its vertices' internal
degree points.  Loops and repeated pairs go to a recycle list and are
repaired by switchings against random edges of the same graph.  A cluster
that stops making progress gives up: the endpoints of its leftover pairs
hand their degree to the background graph.  The background graph is then
paired and repaired the same way, switching only background edges and
never giving up, so the union is simple and every vertex keeps its exact
degree.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .assignment import Assignment
from .edgeset import BACKGROUND, EdgeList, edge_keys
from .errors import GenerationError
from .mixing import WeightSplit
from .streams import as_generator

log = logging.getLogger(__name__)

BACKGROUND_PASSES = 10_000


def cm_pairing(degrees, rng: np.random.Generator, vertices=None):
    """Uniform random perfect matching of degree points, projected to vertex pairs.

    ``degrees`` is an array (with optional matching ``vertices`` ids) or a
    ``{vertex: degree}`` mapping.  Returns ``(u, v)`` arrays; loops and
    repeated pairs are kept.
    """
    if isinstance(degrees, dict):
        vertices = np.fromiter(degrees.keys(), dtype=np.int64, count=len(degrees))
        degrees = np.fromiter(degrees.values(), dtype=np.int64, count=len(vertices))
    degrees = np.asarray(degrees, dtype=np.int64)
    if vertices is None:
        vertices = np.arange(len(degrees), dtype=np.int64)
    total = int(degrees.sum())
    if total % 2:
        raise ValueError(f"total degree {total} is odd; no perfect matching exists")
    points = np.repeat(np.asarray(vertices, dtype=np.int64), degrees)
    rng.shuffle(points)
    return points[0::2].copy(), points[1::2].copy()


def _classify(u, v, n, forbidden=None):
    """Mark loops, repeats after the first occurrence, and pairs hitting ``forbidden``."""
    keys = edge_keys(u, v, n)
    bad = u == v
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    dup = np.zeros(len(keys), dtype=bool)
    dup[order[1:][sk[1:] == sk[:-1]]] = True
    dup &= ~bad
    hit = np.zeros(len(keys), dtype=bool)
    if forbidden is not None and len(forbidden):
        pos = np.searchsorted(forbidden, keys)
        pos[pos == len(forbidden)] = 0
        hit = (forbidden[pos] == keys) & ~bad & ~dup
    return keys, bad, dup, hit


@dataclass
class SwitchStats:
    loops: int = 0
    duplicates: int = 0
    collisions: int = 0
    attempts: int = 0
    switchings: int = 0


def _switch(u, v, bad, edges: set, n: int, rng: np.random.Generator, budget: int, stats: SwitchStats, frozen=None):
    """Repair flagged pairs in place by random switchings.

    ``u``/``v`` are Python lists and ``bad`` a list of flags.  ``edges``
    holds the keys of the unflagged pairs; ``frozen`` is an optional sorted
    key array of edges that may neither be repeated nor switched.  A
    recycled pair ``(a, b)`` and a uniformly chosen partner ``(x, y)`` become
    ``(a, x), (b, y)`` or ``(a, y), (b, x)``; the switching is accepted only
    if both new pairs are simple and new.  Stops when nothing is flagged or
    after ``budget`` consecutive failures; returns the indices still flagged.
    """
    m = len(u)
    recycle = deque(i for i, b in enumerate(bad) if b)
    n_bad = len(recycle)
    fails = 0
    draws: list = []
    pos = 0
    nf = 0 if frozen is None else len(frozen)
    search = None if frozen is None else frozen.searchsorted
    while n_bad and fails < budget and m > 1:
        r = recycle.popleft()
        if not bad[r]:
            continue
        if pos >= len(draws):
            draws = rng.random(8192).tolist()
            pos = 0
        stats.attempts += 1
        j = int(draws[pos] * (m - 1))
        coin = draws[pos + 1] < 0.5
        pos += 2
        if j >= r:
            j += 1
        a, b, x, y = u[r], v[r], u[j], v[j]
        if coin:
            x, y = y, x
        # candidate pairs (a, y) and (b, x)
        if a == y or b == x:
            recycle.append(r)
            fails += 1
            continue
        k1 = a * n + y if a < y else y * n + a
        k2 = b * n + x if b < x else x * n + b
        kj = x * n + y if x < y else y * n + x
        j_good = not bad[j]
        taken = k1 == k2 or (k1 in edges and k1 != kj) or (k2 in edges and k2 != kj)
        if not taken and nf:
            i1 = int(search(k1))
            i2 = int(search(k2))
            taken = (i1 < nf and frozen[i1] == k1) or (i2 < nf and frozen[i2] == k2)
        if taken or (not j_good and (k1 == kj or k2 == kj) and kj in edges):
            recycle.append(r)
            fails += 1
            continue
        if j_good:
            edges.discard(kj)
        edges.add(k1)
        edges.add(k2)
        u[r], v[r], u[j], v[j] = a, y, b, x
        bad[r] = False
        n_bad -= 1
        if not j_good:
            bad[j] = False
            n_bad -= 1
        stats.switchings += 1
        fails = 0
    return [i for i in recycle if bad[i]]


@dataclass
class RecycleState:
    """Outcome of repairing one cluster graph.

    ``recycle`` holds the pairs that could not be repaired; their endpoint
    degrees are listed in ``giveup_degrees``.
    """

    kept_u: np.ndarray
    kept_v: np.ndarray
    recycle: list = field(default_factory=list)
    giveup_degrees: dict = field(default_factory=dict)
    stats: SwitchStats = field(default_factory=SwitchStats)

    @property
    def giveup_edges(self) -> int:
        return len(self.recycle)


def cm_resolve_cluster(u, v, rng, n=None, target_m=None) -> RecycleState:
    """Turn one cluster's pairing into a simple graph, giving up if stuck.

    Switching partners are drawn uniformly from every pair of the cluster,
    recycled ones included.  The cluster gives up once
    ``max(target_m, len(recycle))`` consecutive attempts fail.
    """
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if n is None:
        n = int(max(u.max(initial=0), v.max(initial=0))) + 1
    if target_m is None:
        target_m = len(u)
    keys, loop, dup, _ = _classify(u, v, n)
    stats = SwitchStats(loops=int(loop.sum()), duplicates=int(dup.sum()))
    bad = loop | dup
    if not bad.any():
        return RecycleState(u, v, stats=stats)

    rng = as_generator(rng)
    ul, vl, flags = u.tolist(), v.tolist(), bad.tolist()
    left = _switch(ul, vl, flags, set(keys[~bad].tolist()), n, rng, max(target_m, int(bad.sum())), stats)
    keep = np.ones(len(ul), dtype=bool)
    keep[left] = False
    ua, va = np.asarray(ul, dtype=np.int64), np.asarray(vl, dtype=np.int64)
    giveup: dict[int, int] = {}
    recycle = []
    for i in left:
        recycle.append((ul[i], vl[i]))
        giveup[ul[i]] = giveup.get(ul[i], 0) + 1
        giveup[vl[i]] = giveup.get(vl[i], 0) + 1
    return RecycleState(ua[keep], va[keep], recycle, giveup, stats)


@dataclass
class CMReport:
    cluster_edges: int = 0
    background_edges: int = 0
    loops_removed: int = 0
    duplicates_removed: int = 0
    background_collisions: int = 0
    switchings: int = 0
    giveup_edges: int = 0
    giveup_clusters: int = 0
    degree_deviation_vertices: int = 0


def cm_background(degrees, rng, n: int, cluster_keys, max_passes: int = BACKGROUND_PASSES):
    """Pair and repair the background graph against frozen cluster edges.

    ``cluster_keys`` must be sorted and unique.  Returns ``(u, v, stats)``.
    """
    u, v = cm_pairing(degrees, rng)
    keys, loop, dup, hit = _classify(u, v, n, cluster_keys)
    bad = loop | dup | hit
    stats = SwitchStats(loops=int(loop.sum()), duplicates=int(dup.sum()), collisions=int(hit.sum()))
    if not bad.any():
        return u, v, stats
    ul, vl, flags = u.tolist(), v.tolist(), bad.tolist()
    # one pass = one attempt per recycled pair
    budget = max_passes * int(bad.sum())
    left = _switch(ul, vl, flags, set(keys[~bad].tolist()), n, rng, budget, stats, frozen=cluster_keys)
    if left:
        raise GenerationError(
            f"background graph still has {len(left)} loops or repeated edges after "
            f"{stats.attempts} switching attempts"
        )
    return np.asarray(ul, dtype=np.int64), np.asarray(vl, dtype=np.int64), stats


def cm_generate(split: WeightSplit, assignment: Assignment, rng_clusters, rng_background=None):
    """Build the full configuration-model graph.

    Returns ``(EdgeList, CMReport)``.  Every vertex ends with degree exactly
    ``y_int + z_int``.
    """
    if not split.integer_mode:
        raise ValueError("configuration model needs an integer weight split")
    rng_background = rng_clusters if rng_background is None else rng_background
    n = assignment.n
    report = CMReport()
    parts = []
    giveup = np.zeros(n, dtype=np.int64)
    for c, members in enumerate(assignment.members):
        deg = split.y_int[members]
        if deg.sum() % 2:
            raise GenerationError(f"community {c} has odd internal degree total {int(deg.sum())}")
        if deg.sum() == 0:
            continue
        pu, pv = cm_pairing(deg, rng_clusters, vertices=members)
        state = cm_resolve_cluster(pu, pv, rng_clusters, n=n, target_m=len(pu))
        parts.append((state.kept_u, state.kept_v, c))
        report.loops_removed += state.stats.loops
        report.duplicates_removed += state.stats.duplicates
        report.switchings += state.stats.switchings
        if state.recycle:
            report.giveup_edges += state.giveup_edges
            report.giveup_clusters += 1
            for vertex, d in state.giveup_degrees.items():
                giveup[vertex] += d
    report.cluster_edges = sum(len(p[0]) for p in parts)
    if report.giveup_edges:
        log.info("gave up on %d cluster pairs in %d communities", report.giveup_edges, report.giveup_clusters)

    cluster_keys = np.sort(np.concatenate([edge_keys(p[0], p[1], n) for p in parts])) if parts else np.empty(0, np.int64)
    bg_deg = split.z_int + giveup
    # each given-up pair hands back two endpoints, so parity cannot change
    if bg_deg.sum() % 2:
        raise GenerationError(f"background degree total {int(bg_deg.sum())} is odd after give-up hand-off")
    bu, bv, stats = cm_background(bg_deg, rng_background, n, cluster_keys)
    report.loops_removed += stats.loops
    report.duplicates_removed += stats.duplicates
    report.background_collisions = stats.collisions
    report.switchings += stats.switchings
    report.background_edges = len(bu)
    parts.append((bu, bv, BACKGROUND))
    edges = EdgeList.concat(n, parts)
    target = split.y_int + split.z_int
    report.degree_deviation_vertices = int(np.count_nonzero(edges.degrees() != target))
    return edges, report
