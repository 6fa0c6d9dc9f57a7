import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from su11sim.interferometer import InterferometerParams

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

gains = st.floats(min_value=0.0, max_value=2.0, allow_nan=False)
angles = st.floats(min_value=0.0, max_value=2 * np.pi, allow_nan=False)
params_st = st.builds(InterferometerParams, gains, gains, angles, angles)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def params():
    return InterferometerParams(r1=0.7, r2=1.1, theta=0.4, phi=1.3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
