"""End-to-end generation: sequences, assignment, weight split, edges, files."""

from __future__ import annotations

import dataclasses
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import fileio
from .assignment import Assignment, assign_communities, compute_bounds
from .config import GeneratorConfig
from .edges_cl import cl_generate
from .edges_cm import cm_generate
from .edgeset import EdgeList
from .errors import ABCDError, ConfigError
from .mixing import ResolvedMixing, WeightSplit, compute_phi, resolve_mixing, split_weights
from .sampling import PowerLawSpec, generate_community_sizes, generate_degree_sequence, resolve_min_degree
from .stats import global_mixing
from .streams import fresh_seed, phase_streams

log = logging.getLogger(__name__)

STAGES = ("sequences", "bounds", "assignment", "mixing", "split", "edges", "write")


@dataclass
class RunReport:
    seed: int
    model: str
    mixing_mode: str
    mixing_value: float
    n: int = 0
    communities: int = 0
    total_degree: int = 0
    min_degree: Optional[int] = None
    phi: float = 0.0
    mu0: float = 0.0
    mu1: float = 0.0
    xi_min: float = 0.0
    xi_max: float = 0.0
    edges: int = 0
    cluster_edges: int = 0
    background_edges: int = 0
    realized_mu: float = float("nan")
    loops_removed: int = 0
    duplicates_removed: int = 0
    background_collisions: int = 0
    switchings: int = 0
    giveup_edges: int = 0
    giveup_clusters: int = 0
    degree_deviation_vertices: int = 0
    timings: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclass
class GeneratedGraph:
    degrees: np.ndarray
    sizes: np.ndarray
    assignment: Assignment
    mixing: ResolvedMixing
    split: WeightSplit
    edges: EdgeList
    report: RunReport


@contextmanager
def _stage(name: str, timings: dict):
    start = time.perf_counter()
    try:
        yield
    except ABCDError as exc:
        exc.stage = name
        raise
    finally:
        timings[name] = time.perf_counter() - start
        log.debug("stage %s: %.3fs", name, timings[name])


def _sequences(config: GeneratorConfig, streams, report: RunReport):
    if config.in_degrees is not None:
        w = np.sort(fileio.read_int_sequence(config.in_degrees))[::-1].copy()
        if len(w) == 0 or w.min() < 1:
            raise ConfigError("degrees must be positive integers")
        if config.n is not None and config.n != len(w):
            raise ConfigError(f"n={config.n} but {config.in_degrees} lists {len(w)} degrees")
        if config.model == "cm" and w.sum() % 2:
            raise ConfigError("the configuration model needs an even degree total")
    else:
        w_min = config.min_degree
        if w_min is None:
            w_min = resolve_min_degree(config.avg_degree, config.max_degree, config.gamma)
        report.min_degree = w_min
        spec = PowerLawSpec(config.gamma, w_min, config.max_degree)
        w = generate_degree_sequence(config.n, spec, streams["degrees"], config.max_iters)
    n = len(w)
    if config.in_sizes is not None:
        s = np.sort(fileio.read_int_sequence(config.in_sizes))[::-1].copy()
        if len(s) == 0 or s.min() < 1 or s.sum() != n:
            raise ConfigError(f"community sizes must be positive and sum to n={n}")
    else:
        spec = PowerLawSpec(config.beta, config.min_community, config.max_community)
        s = generate_community_sizes(n, spec, streams["sizes"], config.max_iters)
    return w, s


def generate(config: GeneratorConfig) -> GeneratedGraph:
    """Run every stage in memory and return all artifacts with a report."""
    seed = config.seed if config.seed is not None else fresh_seed()
    streams = phase_streams(seed)
    mixing_spec = config.mixing
    report = RunReport(seed=seed, model=config.model, mixing_mode=mixing_spec.mode, mixing_value=mixing_spec.value)
    t = report.timings

    with _stage("sequences", t):
        w, s = _sequences(config, streams, report)
    with _stage("bounds", t):
        bounds = compute_bounds(w, s, mixing_spec)
    with _stage("assignment", t):
        assignment = assign_communities(bounds, s, streams["assignment"], weights=w)
    with _stage("mixing", t):
        volumes = assignment.volumes
        phi = compute_phi(s)
        resolved = resolve_mixing(mixing_spec, volumes, phi=phi)
    with _stage("split", t):
        split = split_weights(
            w, assignment.community_of, resolved.xi_per_cluster, config.model == "cm", streams["split"]
        )
    with _stage("edges", t):
        if config.model == "cm":
            edges, gen = cm_generate(split, assignment, streams["clusters"], streams["background"])
        else:
            edges, gen = cl_generate(split, assignment, streams["clusters"], streams["background"])

    report.n = len(w)
    report.communities = len(s)
    report.total_degree = int(w.sum())
    report.phi, report.mu0, report.mu1 = phi, resolved.mu0, resolved.mu1
    report.xi_min = float(resolved.xi_per_cluster.min())
    report.xi_max = float(resolved.xi_per_cluster.max())
    report.edges = len(edges)
    for name, value in dataclasses.asdict(gen).items():
        setattr(report, name, value)
    if len(edges):
        report.realized_mu = global_mixing(edges, assignment)
    return GeneratedGraph(w, s, assignment, resolved, split, edges, report)


def write_outputs(config: GeneratorConfig, graph: GeneratedGraph) -> None:
    fileio.write_edge_list(graph.edges, config.out_edges)
    fileio.write_partition(graph.assignment, config.out_communities)
    if config.out_degrees:
        fileio.write_int_sequence(graph.degrees, config.out_degrees)
    if config.out_sizes:
        fileio.write_int_sequence(graph.sizes, config.out_sizes)


def run_generate(config: GeneratorConfig) -> RunReport:
    """Generate, write every requested file, and return the run report."""
    graph = generate(config)
    if not config.skip_write:
        with _stage("write", graph.report.timings):
            write_outputs(config, graph)
    return graph.report
