"""Mixing parameters and the split of vertex weights into cluster and background parts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AntiCommunityError, ConfigError, GenerationError

MIXING_MODES = ("xi_global", "mu_global", "mu_local")


@dataclass(frozen=True)
class MixingSpec:
    """User-facing mixing request.

    ``xi_global`` fixes the background share of every vertex directly.  The
    two ``mu_*`` modes ask for a target fraction of inter-community edges and
    derive the background shares from the realized community volumes.
    """

    mode: str
    value: float

    def __post_init__(self):
        if self.mode not in MIXING_MODES:
            raise ConfigError(f"unknown mixing mode {self.mode!r}; expected one of {MIXING_MODES}")
        if not 0.0 <= self.value <= 1.0:
            raise ConfigError(f"mixing value must lie in [0, 1], got {self.value}")

    @property
    def uses_mu(self) -> bool:
        return self.mode != "xi_global"


@dataclass
class ResolvedMixing:
    xi_per_cluster: np.ndarray
    mu0: float
    mu1: float
    phi: Optional[float] = None


@dataclass
class WeightSplit:
    """Per-vertex cluster (``y``) and background (``z``) weights.

    ``y_int``/``z_int`` are set only in integer mode (configuration model);
    ``leaders`` then holds the vertex that absorbed each cluster's parity fix.
    """

    y: np.ndarray
    z: np.ndarray
    y_int: Optional[np.ndarray] = None
    z_int: Optional[np.ndarray] = None
    leaders: Optional[np.ndarray] = None

    @property
    def integer_mode(self) -> bool:
        return self.y_int is not None


def compute_phi(sizes) -> float:
    s = np.asarray(sizes, dtype=np.float64)
    return float(1.0 - np.sum((s / s.sum()) ** 2))


def mixing_thresholds(volumes, total: Optional[float] = None) -> tuple[float, float]:
    """Return ``(mu0, mu1)`` for the given community volumes."""
    vol = np.asarray(volumes, dtype=np.float64)
    total = float(vol.sum()) if total is None else float(total)
    frac = vol / total
    return float(1.0 - np.sum(frac**2)), float(1.0 - frac.max())


def resolve_mixing(spec: MixingSpec, volumes, total: Optional[float] = None, phi=None) -> ResolvedMixing:
    """Turn a mixing request into one background share ``xi`` per community.

    Raises :class:`AntiCommunityError` when ``mu`` exceeds ``mu0`` (global)
    or ``mu1`` (local).
    """
    vol = np.asarray(volumes, dtype=np.float64)
    if np.any(vol <= 0):
        raise ConfigError("community volumes must be positive")
    total = float(vol.sum()) if total is None else float(total)
    mu0, mu1 = mixing_thresholds(vol, total)
    k = len(vol)

    if spec.mode == "xi_global":
        xi = np.full(k, spec.value)
    elif spec.mode == "mu_global":
        if spec.value > mu0:
            raise AntiCommunityError(spec.value, mu0, "global")
        xi = np.full(k, spec.value / mu0 if spec.value > 0 else 0.0)
    else:
        if spec.value > mu1:
            raise AntiCommunityError(spec.value, mu1, "local")
        xi = spec.value * total / (total - vol) if spec.value > 0 else np.zeros(k)
    # guard against 1 + ulp at the exact threshold
    xi = np.clip(xi, 0.0, 1.0)
    return ResolvedMixing(xi_per_cluster=xi, mu0=mu0, mu1=mu1, phi=phi)


def randomized_round(x, rng: np.random.Generator):
    """Round down or up at random so that the expectation equals ``x``.

    Accepts a scalar or an array; arrays are rounded elementwise from a
    single vectorized draw.
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr < 0):
        raise ValueError("randomized_round expects non-negative input")
    base = np.floor(arr)
    frac = arr - base
    out = base.astype(np.int64) + (rng.random(arr.shape) < frac)
    if out.ndim == 0:
        return int(out)
    return out


def expected_internal_degree(w_i: float, xi: float, W_l: float, W: float) -> float:
    """Expected number of neighbours a vertex of weight ``w_i`` has inside its own community."""
    return w_i * (W_l / W + (1.0 - xi) * (W - W_l) / W)


def find_leaders(weights: np.ndarray, community_of: np.ndarray, k: int) -> np.ndarray:
    """Highest-weight vertex of each community; ties go to the lowest vertex index."""
    n = len(weights)
    order = np.lexsort((np.arange(n), -np.asarray(weights), community_of))
    first = np.ones(n, dtype=bool)
    first[1:] = community_of[order][1:] != community_of[order][:-1]
    leaders = np.full(k, -1, dtype=np.int64)
    leaders[community_of[order][first]] = order[first]
    return leaders


def split_weights(
    weights,
    community_of,
    xi_per_cluster,
    integer_mode: bool,
    rng: Optional[np.random.Generator] = None,
) -> WeightSplit:
    """Split every weight into a cluster part ``y`` and a background part ``z``.

    In integer mode each non-leader's ``y`` is randomly rounded; each leader
    is then rounded to whichever neighbouring integer makes its community's
    internal total even.  A leader whose ``y`` is already an integer on an
    odd community is moved down by one (both moves are equally close), or up
    when it sits at zero.
    """
    w = np.asarray(weights)
    comm = np.asarray(community_of)
    xi = np.asarray(xi_per_cluster, dtype=np.float64)
    k = len(xi)
    y = (1.0 - xi[comm]) * w
    z = w - y
    if not integer_mode:
        return WeightSplit(y=y, z=z)
    if rng is None:
        raise ValueError("integer mode requires a random generator")

    w_int = w.astype(np.int64)
    leaders = find_leaders(w, comm, k)
    y_int = randomized_round(y, rng)
    has_leader = leaders >= 0
    lead = leaders[has_leader]
    y_int[lead] = 0
    parity = np.bincount(comm, weights=y_int, minlength=k).astype(np.int64) % 2

    y_lead = y[lead]
    lo = np.floor(y_lead).astype(np.int64)
    integral = lo == y_lead
    need = parity[has_leader]
    # non-integral: exactly one of floor/ceil fixes the parity
    chosen = np.where((lo % 2) == need, lo, lo + 1)
    for j in np.flatnonzero(integral & ((lo % 2) != need)):
        v = lead[j]
        options = [c for c in (lo[j] - 1, lo[j] + 1) if 0 <= c <= w_int[v]]
        if not options:
            raise GenerationError(
                f"cannot fix the parity of community {comm[v]}: leader {v} has weight {w_int[v]}"
            )
        chosen[j] = options[0]
    y_int[lead] = chosen
    if np.any(y_int < 0) or np.any(y_int > w_int):
        bad = int(np.flatnonzero((y_int < 0) | (y_int > w_int))[0])
        raise GenerationError(f"internal degree of vertex {bad} left [0, {w_int[bad]}]")
    return WeightSplit(y=y, z=z, y_int=y_int, z_int=w_int - y_int, leaders=leaders)
