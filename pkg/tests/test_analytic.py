import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su11sim.analytic import analytic_state, crosscheck
from su11sim.gaussian import InvalidDimensionError
from su11sim.interferometer import Family, InterferometerParams, build

from conftest import params_st

TOL = 1e-12


@pytest.mark.parametrize("family", list(Family))
@given(p=params_st, M=st.integers(2, 12))
def test_closed_form_matches_builder(family, p, M):
    assert crosscheck(family, M, p) < TOL


def test_central_block_at_eight_modes():
    p = InterferometerParams(1.2, 0.8, 0.7, 0.0)
    s = build(Family.SU11, 8, p)
    e = np.exp(1j * p.theta)
    # translation-invariant interior entries
    assert np.isclose(s.block_A[3, 3], p.V1 * p.V2)
    assert np.isclose(s.block_A[2, 4], 2 * p.c1 * p.c2 * e)
    assert np.isclose(s.block_A[3, 5], 2 * p.c1 * p.c2 / e)
    assert np.isclose(s.block_B[2, 3], 2 * p.V1 * p.c2 * e)
    assert np.isclose(s.block_B[3, 4], 2 * p.c1 * p.mu2**2)
    assert np.isclose(s.block_B[2, 5], 2 * p.c1 * p.nu2**2 * e**2)


def test_rejects_single_mode(params):
    with pytest.raises(InvalidDimensionError):
        analytic_state(Family.SU11, 1, params)
