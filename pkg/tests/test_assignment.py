from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abcdgen import InfeasibleError, MixingSpec, assign_communities, compute_bounds
from abcdgen.assignment import eligible_counts

from oracles import admissible_assignments, chi_square_pvalue


def test_bounds_without_mixing():
    w = np.array([9, 7, 3])
    assert compute_bounds(w, [2, 1], MixingSpec("xi_global", 0.0)).tolist() == [9, 7, 3]


def test_bounds_with_xi():
    # phi = 0.5 for two equal communities: ceil(10 * 0.75)
    assert compute_bounds([10], [5, 5], MixingSpec("xi_global", 0.5)).tolist() == [8]


@pytest.mark.parametrize("mode", ["mu_global", "mu_local"])
def test_bounds_with_mu(mode):
    # 0.8 * 10 is 8.000000000000002 in floating point; must still give 8
    assert compute_bounds([10], [5, 5], MixingSpec(mode, 0.2)).tolist() == [8]


def test_symmetric_instance_frequencies(rng):
    hits = np.zeros((4, 2))
    runs = 100_000
    for _ in range(runs):
        a = assign_communities([1, 1, 1, 1], [2, 2], rng)
        hits[np.arange(4), a.community_of] += 1
    assert np.allclose(hits / runs, 0.5, atol=0.01)


def test_forced_placement(rng):
    for _ in range(100):
        a = assign_communities([2, 0, 0, 0], [3, 1], rng)
        assert a.community_of[0] == 0


def test_empty_admissible_set(rng):
    with pytest.raises(InfeasibleError, match="no admissible assignment"):
        assign_communities([5, 0, 0, 0, 0, 0], [3, 3], rng)


def test_hall_violation_deep_in_order(rng):
    # three vertices need the size-3 community but only two of them fit besides the third
    with pytest.raises(InfeasibleError):
        assign_communities([2, 2, 2, 2, 0], [3, 2], rng)


def test_eligible_counts():
    assert eligible_counts([4, 2, 1, 0], [5, 3, 2, 1]).tolist() == [1, 2, 3, 4]


@pytest.mark.parametrize(
    "bounds, sizes",
    [
        ([3, 2, 2, 1, 0, 0, 0, 0], [4, 3, 1]),
        ([2, 2, 1, 1, 1, 0, 0], [3, 3, 1]),
        ([1, 1, 1, 1, 1, 1], [2, 2, 2]),
    ],
)
def test_uniform_over_admissible_set(bounds, sizes, rng):
    support = admissible_assignments(bounds, sizes)
    law = {labels: 1 / len(support) for labels in support}
    runs = 30_000
    seen = Counter(tuple(assign_communities(bounds, sizes, rng).community_of.tolist()) for _ in range(runs))
    assert chi_square_pvalue(seen, law, runs) > 0.01


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(1, 12), min_size=1, max_size=8),
    st.data(),
)
def test_assignment_is_admissible(sizes, data):
    sizes = sorted(sizes, reverse=True)
    n = sum(sizes)
    bounds = sorted(data.draw(st.lists(st.integers(0, 12), min_size=n, max_size=n)), reverse=True)
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    t = eligible_counts(bounds, sizes)
    feasible = all(sum(sizes[: t[i]]) > i for i in range(n))
    if not feasible:
        with pytest.raises(InfeasibleError):
            assign_communities(bounds, sizes, rng)
        return
    a = assign_communities(bounds, sizes, rng)
    assert a.sizes.tolist() == sizes
    assert np.all(np.asarray(bounds) <= np.asarray(sizes)[a.community_of] - 1)
