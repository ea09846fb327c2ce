import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def trapezoid_periodic(f, points=4096):
    """Trapezoid rule over one period of a 2*pi-periodic callable (spectrally accurate)."""
    psi = 2.0 * np.pi * np.arange(points) / points
    return 2.0 * np.pi * np.mean(f(psi))
