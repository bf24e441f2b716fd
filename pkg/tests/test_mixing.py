import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abcdgen import (
    AntiCommunityError,
    ConfigError,
    MixingSpec,
    compute_phi,
    expected_internal_degree,
    randomized_round,
    resolve_mixing,
    split_weights,
)
from abcdgen.mixing import find_leaders, mixing_thresholds


@pytest.mark.parametrize(
    "sizes, phi",
    [([10], 0.0), ([5, 5], 0.5), ([3, 2, 1], 1 - 14 / 36)],
)
def test_phi(sizes, phi):
    assert compute_phi(sizes) == pytest.approx(phi)


@pytest.mark.parametrize("mode", ["mu_global", "mu_local"])
def test_equal_volumes_give_double_xi(mode):
    resolved = resolve_mixing(MixingSpec(mode, 0.2), [100, 100])
    assert resolved.mu0 == pytest.approx(0.5)
    assert np.allclose(resolved.xi_per_cluster, 0.4)


def test_xi_mode_is_passthrough():
    assert np.allclose(resolve_mixing(MixingSpec("xi_global", 0.3), [5, 7, 9]).xi_per_cluster, 0.3)


def test_anti_community_regime():
    with pytest.raises(AntiCommunityError, match="anti-community"):
        resolve_mixing(MixingSpec("mu_global", 0.6), [100, 100])


def test_local_threshold_uses_largest_cluster():
    # mu1 = 1 - 0.7 = 0.3 < mu0 = 0.42
    with pytest.raises(AntiCommunityError):
        resolve_mixing(MixingSpec("mu_local", 0.35), [70, 30])
    resolve_mixing(MixingSpec("mu_global", 0.35), [70, 30])


def test_mixing_spec_rejects_out_of_range():
    with pytest.raises(ConfigError):
        MixingSpec("mu_global", 1.2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 1000), min_size=2, max_size=30), st.floats(0, 1))
def test_resolved_xi_recovers_mu(volumes, frac):
    mu0, mu1 = mixing_thresholds(volumes)
    assert mu0 >= mu1 - 1e-12
    mu = frac * mu1
    W = sum(volumes)
    glob = resolve_mixing(MixingSpec("mu_global", mu), volumes).xi_per_cluster
    assert glob[0] * mu0 == pytest.approx(mu, abs=1e-12)
    local = resolve_mixing(MixingSpec("mu_local", mu), volumes).xi_per_cluster
    # xi_l (1 - W_l/W) = mu for every cluster
    assert np.allclose(local * (1 - np.asarray(volumes) / W), mu)


def test_round_integer_is_exact(rng):
    assert all(randomized_round(3.0, rng) == 3 for _ in range(100))


def test_round_is_unbiased(rng):
    draws = randomized_round(np.full(100_000, 2.25), rng)
    assert set(np.unique(draws)) == {2, 3}
    assert abs(draws.mean() - 2.25) < 0.01


def test_round_near_integer(rng):
    draws = randomized_round(np.full(100_000, 0.999), rng)
    assert abs(np.mean(draws == 1) - 0.999) < 0.005


@pytest.mark.parametrize(
    "w, xi, W_l, W, expected",
    [(10, 0.0, 20, 80, 10.0), (12, 1.0, 20, 80, 3.0), (100, 0.4, 50, 100, 80.0)],
)
def test_expected_internal_degree(w, xi, W_l, W, expected):
    assert expected_internal_degree(w, xi, W_l, W) == pytest.approx(expected)


@pytest.mark.parametrize("integer_mode", [False, True])
def test_split_extremes(integer_mode, rng):
    w = np.array([5, 3, 3, 1])
    comm = np.array([0, 0, 1, 1])
    zero = split_weights(w, comm, [0.0, 0.0], integer_mode, rng)
    one = split_weights(w, comm, [1.0, 1.0], integer_mode, rng)
    if integer_mode:
        assert zero.y_int.tolist() == w.tolist() and zero.z_int.sum() == 0
        assert one.y_int.sum() == 0 and one.z_int.tolist() == w.tolist()
    else:
        assert np.allclose(zero.y, w) and np.allclose(zero.z, 0)
        assert np.allclose(one.y, 0) and np.allclose(one.z, w)


def test_leader_parity_branches():
    w = np.array([8, 4])
    comm = np.array([0, 0])
    outcomes = set()
    for seed in range(200):
        split = split_weights(w, comm, [0.6], True, np.random.default_rng(seed))
        assert np.allclose(split.y, [3.2, 1.6])
        assert split.leaders.tolist() == [0]
        outcomes.add(tuple(split.y_int.tolist()))
    assert outcomes == {(4, 2), (3, 1)}


def test_integral_leader_rounds_down(rng):
    # y = (2, 1): odd total, leader moves down to 1
    split = split_weights(np.array([4, 2]), np.array([0, 0]), [0.5], True, rng)
    assert split.y_int.tolist() == [1, 1]


def test_leaders_break_ties_by_lowest_index():
    w = np.array([3, 7, 7, 2, 9])
    comm = np.array([0, 0, 0, 1, 1])
    assert find_leaders(w, comm, 2).tolist() == [1, 4]


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.tuples(st.integers(1, 60), st.integers(0, 4)), min_size=1, max_size=60),
    st.lists(st.floats(0, 1), min_size=5, max_size=5),
    st.integers(0, 2**32 - 1),
)
def test_integer_split_invariants(pairs, xis, seed):
    w = np.array([p[0] for p in pairs])
    comm = np.array([p[1] for p in pairs])
    split = split_weights(w, comm, xis, True, np.random.default_rng(seed))
    assert np.all(split.y_int + split.z_int == w)
    assert np.all((split.y_int >= 0) & (split.y_int <= w))
    assert np.all(np.bincount(comm, weights=split.y_int, minlength=5) % 2 == 0)
    # non-leaders stay within one of their real share
    assert np.all(np.abs(split.y_int - split.y) < 1 + 1e-9)
