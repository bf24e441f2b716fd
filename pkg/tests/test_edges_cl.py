import numpy as np
import pytest

from abcdgen import Assignment, GenerationError, cl_generate, cl_sample_edges, split_weights
from abcdgen.edges_cl import AliasTable
from abcdgen.edgeset import BACKGROUND, edge_keys


def test_alias_table_frequencies(rng):
    w = np.array([1.0, 2.0, 0.0, 7.0])
    draws = AliasTable(w).sample(rng, 200_000)
    assert np.allclose(np.bincount(draws, minlength=4) / len(draws), w / w.sum(), atol=0.005)


def test_triangle_is_forced(rng):
    u, v = cl_sample_edges([0, 1, 2], [1.0, 1.0, 1.0], 3, rng, n=3)
    assert sorted(edge_keys(u, v, 3).tolist()) == [1, 2, 5]


def test_zero_target(rng):
    u, v = cl_sample_edges([0, 1, 2], [1.0, 1.0, 1.0], 0, rng, n=3)
    assert len(u) == len(v) == 0


def test_no_simple_edge_left(rng):
    with pytest.raises(GenerationError):
        cl_sample_edges([0, 1], [1.0, 1.0], 1, rng, n=2, forbidden=edge_keys([0], [1], 2))


def test_forbidden_edges_avoided(rng):
    n = 30
    forbidden = np.sort(edge_keys(np.zeros(29, int), np.arange(1, 30), n))
    u, v = cl_sample_edges(np.arange(n), np.ones(n), 200, rng, n=n, forbidden=forbidden)
    keys = edge_keys(u, v, n)
    assert len(np.unique(keys)) == 200
    assert not np.any(np.isin(keys, forbidden))
    assert not np.any(u == v)


def _two_blocks(n=10_000, w=10):
    comm = np.repeat([0, 1], n // 2)
    return np.full(n, w), Assignment(comm, 2, weights=np.full(n, w))


@pytest.mark.parametrize("xi", [0.0, 1.0])
def test_extreme_mixing(xi):
    weights, assignment = _two_blocks(2000)
    split = split_weights(weights, assignment.community_of, [xi, xi], False)
    edges, report = cl_generate(split, assignment, np.random.default_rng(3))
    assert edges.is_simple()
    if xi == 0:
        assert report.background_edges == 0
        assert np.all(edges.source != BACKGROUND)
    else:
        assert report.cluster_edges == 0
        assert len(edges) == weights.sum() // 2
        assert np.all(edges.source == BACKGROUND)


def test_inter_fraction_matches_prediction():
    # equal halves: mu = xi * (1 - 1/2)
    weights, assignment = _two_blocks()
    fractions = []
    for seed in range(10):
        split = split_weights(weights, assignment.community_of, [0.4, 0.4], False)
        edges, _ = cl_generate(split, assignment, np.random.default_rng(seed))
        comm = assignment.community_of
        fractions.append(np.mean(comm[edges.u] != comm[edges.v]))
    assert abs(np.mean(fractions) - 0.2) < 0.02


def test_cluster_edges_stay_inside(rng):
    weights, assignment = _two_blocks(2000)
    split = split_weights(weights, assignment.community_of, [0.3, 0.3], False)
    edges, report = cl_generate(split, assignment, rng)
    comm = assignment.community_of
    inside = edges.source != BACKGROUND
    assert np.all(comm[edges.u[inside]] == edges.source[inside])
    assert np.all(comm[edges.v[inside]] == edges.source[inside])
    assert report.cluster_edges + report.background_edges == len(edges) == weights.sum() // 2
