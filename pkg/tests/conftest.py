import numpy as np
import pytest

from twomode import OscillatorParams, SymmetricEnvironmentParams


@pytest.fixture
def osc():
    return OscillatorParams(m=1.0, omega=1.0)


@pytest.fixture
def reference_env():
    """Strictly valid environment whose asymptotic state is entangled."""
    return SymmetricEnvironmentParams(lam=1.0, d_xx=0.6, d_pxpx=0.6, d_xpy=0.3)


@pytest.fixture
def boundary_env():
    """Passes the pairwise coefficient inequalities but fails full positivity."""
    return SymmetricEnvironmentParams(lam=0.5, d_xx=0.25, d_pxpx=0.25, d_xpy=0.2)


@pytest.fixture
def reference_sigma_inf():
    """Asymptotic covariance of the reference environment, from the closed forms."""
    return np.array(
        [
            [0.60, 0.00, 0.15, 0.15],
            [0.00, 0.60, 0.15, -0.15],
            [0.15, 0.15, 0.60, 0.00],
            [0.15, -0.15, 0.00, 0.60],
        ]
    )
