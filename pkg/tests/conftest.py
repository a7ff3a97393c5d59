import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def null_mean(rng, n):
    x = rng.normal(size=n)
    return x - x.mean()
