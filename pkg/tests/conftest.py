import numpy as np
import pytest

from abcdgen import GeneratorConfig


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def small_config(**overrides) -> GeneratorConfig:
    """n=10^4 benchmark shape used across the integration tests."""
    base = dict(
        n=10_000,
        gamma=2.5,
        min_degree=5,
        max_degree=50,
        beta=1.5,
        min_community=50,
        max_community=1000,
        mu=0.2,
        model="cm",
        seed=1,
        skip_write=True,
    )
    base.update(overrides)
    return GeneratorConfig(**base).validate()
