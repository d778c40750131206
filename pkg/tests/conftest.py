import numpy as np
import pytest

from irrev import ModelSpec, generate, paper_length


@pytest.fixture(scope="session")
def logistic_series():
    return generate(ModelSpec("logistic", paper_length()))


@pytest.fixture(scope="session")
def henon_series():
    return generate(ModelSpec("henon", paper_length()))


@pytest.fixture(scope="session")
def gaussian_series():
    return generate(ModelSpec("gaussian", paper_length(), params={"seed": 2030}))


def random_series_with_ties(rng, n=1000, tie_fraction=0.1):
    """Continuous series with ~tie_fraction of samples copied from neighbours."""
    x = rng.standard_normal(n)
    n_ties = int(tie_fraction * n)
    for pos in rng.integers(1, n, size=n_ties):
        x[pos] = x[pos - 1]
    return x
