import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20250808)


def random_image(rng, rows, cols, scale=1.0):
    return scale * rng.standard_normal((rows, cols))


def rel_err(actual, reference):
    """Max abs difference over max abs of the reference (1.0 floor on zero)."""
    ref = np.max(np.abs(reference))
    return np.max(np.abs(np.asarray(actual) - np.asarray(reference))) / max(ref, 1e-300)
