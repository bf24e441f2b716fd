"""Realized community structure of a graph against its ground truth."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .assignment import Assignment
from .edgeset import EdgeList


def _crossing(edges: EdgeList, assignment: Assignment) -> np.ndarray:
    comm = assignment.community_of
    return comm[edges.u] != comm[edges.v]


def global_mixing(edges: EdgeList, assignment: Assignment) -> float:
    """Fraction of edges joining two different communities."""
    if len(edges) == 0:
        raise ValueError("mixing is undefined for a graph without edges")
    return float(np.count_nonzero(_crossing(edges, assignment)) / len(edges))


@dataclass
class CommunityMixing:
    """Per-community measurements; ``mu`` is NaN where the volume is zero."""

    size: np.ndarray
    volume: np.ndarray
    external: np.ndarray

    @property
    def mu(self) -> np.ndarray:
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(self.volume > 0, self.external / np.maximum(self.volume, 1), np.nan)


def community_mixing(edges: EdgeList, assignment: Assignment) -> CommunityMixing:
    """External share of each community's degree volume.

    Counting edge endpoints (not edges) makes the volume-weighted mean of the
    per-community values equal :func:`global_mixing` exactly.
    """
    k = assignment.num_communities
    comm = assignment.community_of
    cu, cv = comm[edges.u], comm[edges.v]
    cross = cu != cv
    volume = np.bincount(cu, minlength=k) + np.bincount(cv, minlength=k)
    external = np.bincount(cu[cross], minlength=k) + np.bincount(cv[cross], minlength=k)
    return CommunityMixing(size=assignment.sizes, volume=volume, external=external)


def expected_mixing_curve(volumes, xi) -> np.ndarray:
    """Predicted external share per community: ``xi * (1 - W_l / W)``.

    ``xi`` may be a scalar or one value per community.
    """
    vol = np.asarray(volumes, dtype=np.float64)
    frac = vol / vol.sum()
    return 1.0 - (frac + (1.0 - np.asarray(xi, dtype=np.float64)) * (1.0 - frac))


def size_slope(sizes, mu) -> float:
    """Least-squares slope of per-community mixing against community size."""
    s = np.asarray(sizes, dtype=np.float64)
    m = np.asarray(mu, dtype=np.float64)
    ok = np.isfinite(m)
    return float(np.polyfit(s[ok], m[ok], 1)[0])


def bucket_means(sizes, values, edges) -> list[tuple[float, float, int, float]]:
    """Group by size into ``[edges[i], edges[i+1])`` buckets.

    Returns ``(lo, hi, count, mean)`` per non-empty bucket.
    """
    s = np.asarray(sizes)
    v = np.asarray(values, dtype=np.float64)
    out = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        sel = (s >= lo) & (s < hi) & np.isfinite(v)
        if sel.any():
            out.append((lo, hi, int(sel.sum()), float(v[sel].mean())))
    return out


@dataclass
class MixingTable:
    global_mu: float
    per_community: CommunityMixing
    predicted: Optional[np.ndarray] = None

    def rows(self):
        pc = self.per_community
        mu = pc.mu
        for c in range(len(pc.size)):
            pred = None if self.predicted is None else float(self.predicted[c])
            yield c + 1, int(pc.size[c]), int(pc.volume[c]), float(mu[c]), pred

    def to_tsv(self) -> str:
        lines = [f"# global_mu\t{self.global_mu:.6f}", "community\tsize\tvolume\tmu\tpredicted_mu"]
        for c, size, vol, mu, pred in self.rows():
            mu_s = "NA" if np.isnan(mu) else f"{mu:.6f}"
            pred_s = "NA" if pred is None else f"{pred:.6f}"
            lines.append(f"{c}\t{size}\t{vol}\t{mu_s}\t{pred_s}")
        return "\n".join(lines) + "\n"


def mixing_table(edges: EdgeList, assignment: Assignment, xi=None) -> MixingTable:
    """Measured mixing, plus the predicted curve when ``xi`` is known.

    Predictions use realized degree volumes, so the table can be built for
    any graph with a partition.
    """
    pc = community_mixing(edges, assignment)
    predicted = None if xi is None else expected_mixing_curve(np.maximum(pc.volume, 0), xi)
    return MixingTable(global_mixing(edges, assignment), pc, predicted)
