import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su11sim.entanglement import symplectic_eigenvalues
from su11sim.gaussian import (
    DimensionMismatchError,
    GaussianError,
    GaussianState,
    InvalidDimensionError,
    InvalidModeError,
    apply,
    bosonic_metric,
    bs_matrix,
    identity_op,
    partial_trace,
    tmsq_matrix,
    to_quadrature,
    vacuum,
)
from su11sim.interferometer import build_rho, build_rho_s

from conftest import angles, gains, params_st


def test_vacuum_blocks():
    for M in (1, 3):
        s = vacuum(M)
        assert np.array_equal(s.block_A, np.eye(M))
        assert np.array_equal(s.block_B, np.zeros((M, M)))
        assert np.array_equal(s.displacement, np.zeros(2 * M))


def test_vacuum_rejects_zero_modes():
    with pytest.raises(InvalidDimensionError):
        vacuum(0)


def test_state_is_immutable():
    s = vacuum(2)
    with pytest.raises(ValueError):
        s.block_A[0, 0] = 2


def test_non_hermitian_A_rejected():
    with pytest.raises(GaussianError):
        GaussianState(np.array([[1, 1j], [1j, 1]]), np.zeros((2, 2)))


def test_asymmetric_B_rejected():
    with pytest.raises(GaussianError):
        GaussianState(np.eye(2), np.array([[0, 1], [2, 0]]))


def test_two_mode_squeezer_matches_single_pump_block():
    r, th = 0.8, 0.3
    S = tmsq_matrix(2, 1, 2, r, th).matrix
    mu, nu = np.cosh(r), np.sinh(r) * np.exp(1j * th)
    expected = np.array(
        [[mu, 0, 0, nu], [0, mu, nu, 0], [0, np.conj(nu), mu, 0], [np.conj(nu), 0, 0, mu]]
    )
    assert np.allclose(S, expected, atol=1e-15)


@given(angles)
def test_zero_gain_squeezer_is_identity(theta):
    assert np.array_equal(tmsq_matrix(3, 1, 3, 0.0, theta).matrix, identity_op(3).matrix)


@given(gains, angles, st.integers(2, 6), st.data())
def test_squeezer_preserves_metric(r, theta, M, data):
    i = data.draw(st.integers(1, M - 1))
    j = data.draw(st.integers(i + 1, M))
    assert tmsq_matrix(M, i, j, r, theta).metric_error() < 1e-12


@given(angles, st.integers(2, 6))
def test_splitter_is_passive_unitary(phi, M):
    op = bs_matrix(M, 1, M, phi)
    assert np.array_equal(op.block_SB, np.zeros((M, M)))
    assert np.allclose(op.block_SA @ op.block_SA.conj().T, np.eye(M), atol=1e-15)
    assert op.metric_error() < 1e-12
    assert apply(op, vacuum(M)).allclose(vacuum(M), atol=1e-15)


@pytest.mark.parametrize("args", [(3, 2, 2), (3, 0, 2), (3, 1, 4)])
def test_bad_mode_pairs(args):
    with pytest.raises(InvalidModeError):
        tmsq_matrix(*args, r=0.1)
    with pytest.raises(InvalidModeError):
        bs_matrix(*args)


def test_single_squeezer_on_vacuum():
    r, th = 0.9, 1.2
    s = apply(tmsq_matrix(2, 1, 2, r, th), vacuum(2))
    V, c = np.cosh(r) ** 2 + np.sinh(r) ** 2, np.cosh(r) * np.sinh(r)
    assert np.allclose(s.block_A, V * np.eye(2), atol=1e-14)
    assert np.allclose(s.block_B, [[0, 2 * c * np.exp(1j * th)], [2 * c * np.exp(1j * th), 0]], atol=1e-14)


def test_opposite_phase_squeezer_undoes():
    r, th = 0.7, 0.5
    s = apply(tmsq_matrix(2, 1, 2, r, th), vacuum(2))
    s = apply(tmsq_matrix(2, 1, 2, r, th + np.pi), s)
    assert s.allclose(vacuum(2), atol=1e-12)


@given(gains, angles, angles)
def test_inverse_round_trip(r, theta, phi):
    state = apply(tmsq_matrix(3, 1, 2, 0.6, 0.2), vacuum(3))
    for op in (tmsq_matrix(3, 2, 3, r, theta), bs_matrix(3, 1, 3, phi)):
        back = apply(op, apply(op.inverse(), state))
        assert back.max_deviation(state) < 1e-10 * max(1, np.abs(state.sigma_c).max())


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        apply(identity_op(2), vacuum(3))


def test_partial_trace_all_modes_is_identity(params):
    s = build_rho(5, params)
    assert partial_trace(s, [1, 2, 3, 4, 5]).allclose(s, atol=0)


def test_partial_trace_single_mode_is_thermal(params):
    s = partial_trace(build_rho(2, params), [1])
    assert np.isclose(s.block_A[0, 0], params.V2)
    assert s.block_B[0, 0] == 0


@pytest.mark.parametrize("keep", [[], [2, 1], [0, 1], [1, 7]])
def test_partial_trace_rejects_bad_keep(keep):
    with pytest.raises(InvalidModeError):
        partial_trace(vacuum(3), keep)


def test_vacuum_quadrature_is_exact_identity():
    for M in range(1, 6):
        assert np.array_equal(to_quadrature(vacuum(M)).matrix, np.eye(2 * M))


def test_quadrature_of_epr_pair():
    r = 0.6
    q = to_quadrature(apply(tmsq_matrix(2, 1, 2, r, 0.0), vacuum(2))).matrix
    V, c = np.cosh(2 * r), np.sinh(2 * r)
    assert np.allclose(q[0::2, 0::2], [[V, c], [c, V]], atol=1e-14)
    assert np.allclose(q[1::2, 1::2], [[V, -c], [-c, V]], atol=1e-14)
    assert np.allclose(q[0::2, 1::2], 0, atol=1e-14)


def test_quadrature_matches_basis_change(params):
    from su11sim.gaussian import basis_change

    s = build_rho(6, params)
    W = basis_change(6)
    direct = W @ s.sigma_c @ W.conj().T
    assert np.max(np.abs(direct.imag)) < 1e-12 * np.abs(direct).max()
    assert np.allclose(to_quadrature(s).matrix, direct.real, atol=1e-12 * np.abs(direct).max())


@given(params_st)
def test_partial_trace_commutes_with_quadrature(p):
    s = build_rho(6, p)
    keep = [2, 3, 5]
    idx = [q for m in keep for q in (2 * m - 2, 2 * m - 1)]
    a = to_quadrature(partial_trace(s, keep)).matrix
    b = to_quadrature(s).matrix[np.ix_(idx, idx)]
    assert np.max(np.abs(a - b)) < 1e-12


@given(params_st)
def test_states_satisfy_uncertainty(p):
    for s in (build_rho(5, p), build_rho_s(4, p)):
        q = to_quadrature(s).matrix
        assert np.linalg.eigvalsh(q).min() > 0
        assert symplectic_eigenvalues(q).minimum >= 1 - 1e-9


def test_compose_applies_right_operand_first():
    a, b = tmsq_matrix(3, 1, 2, 0.4, 0.1), bs_matrix(3, 2, 3, 0.9)
    direct = apply(a, apply(b, vacuum(3)))
    assert a.compose(b).matrix.shape == (6, 6)
    assert apply(a.compose(b), vacuum(3)).max_deviation(direct) < 1e-13
    K = bosonic_metric(3)
    S = a.compose(b).matrix
    assert np.allclose(S @ K @ S.conj().T, K, atol=1e-12)
