"""Photon-number means, covariances and linear-combination variances."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gaussian import DimensionMismatchError, GaussianState, InvalidDimensionError
from .interferometer import Family, InterferometerParams

CLIP_TOL = 1e-12


@dataclass(frozen=True)
class PhotonCovariance:
    mean_vector: np.ndarray
    K: np.ndarray

    def __post_init__(self):
        m = np.array(self.mean_vector, dtype=float)
        K = np.array(self.K, dtype=float)
        if K.shape != (m.size, m.size):
            raise DimensionMismatchError(f"K shape {K.shape} does not match {m.size} modes")
        m.setflags(write=False)
        K.setflags(write=False)
        object.__setattr__(self, "mean_vector", m)
        object.__setattr__(self, "K", K)

    @property
    def mode_count(self) -> int:
        return self.mean_vector.size

    def lc_variance(self, weights) -> float:
        return _quadratic_variance(self.K, weights)


def mean_photons(state: GaussianState) -> np.ndarray:
    d = state.mean_field
    return (np.diag(state.block_A).real - 1) / 2 + np.abs(d) ** 2


def photon_covariance(state: GaussianState) -> PhotonCovariance:
    """Photon-number covariance ``<N_i N_j> - <N_i><N_j>`` of a Gaussian state.

    With ``d_i = <a_i>`` the displacement contribution is
    ``Re[(d d^dag) o A* + (d d^T) o B*]``; for a coherent state this gives
    the Poissonian ``K_ii = |d_i|^2``.
    """
    A, B = state.block_A, state.block_B
    d = state.mean_field
    M = state.mode_count
    K = (A * A.conj() + B * B.conj() - np.eye(M)).real / 4
    K = K + (np.outer(d, d.conj()) * A.conj() + np.outer(d, d) * B.conj()).real
    return PhotonCovariance(mean_photons(state), (K + K.T) / 2)


def _quadratic_variance(K: np.ndarray, weights) -> float:
    w = np.asarray(weights, dtype=float).reshape(-1)
    if w.size != K.shape[0]:
        raise DimensionMismatchError(f"expected {K.shape[0]} weights, got {w.size}")
    value = float(w @ K @ w)
    if -CLIP_TOL <= value < 0:
        return 0.0
    return value


def photon_lc_variance(state: GaussianState, weights) -> float:
    """Variance of ``sum_k w_k N_k``; values within ``[-1e-12, 0)`` are reported as 0."""
    return _quadratic_variance(photon_covariance(state).K, weights)


def alternating_weights(M: int) -> np.ndarray:
    """``(+1, -1, +1, ...)``."""
    return np.array([(-1) ** k for k in range(M)], dtype=float)


def paired_alternating_weights(M: int) -> np.ndarray:
    """``(+1, +1, -1, -1, +1, +1, ...)``."""
    return np.array([(-1) ** (k // 2) for k in range(M)], dtype=float)


# closed forms -----------------------------------------------------------------


class _Sym:
    def __init__(self, M: int):
        self.K = np.zeros((M, M))

    def set(self, i: int, j: int, value: float) -> None:
        self.K[i - 1, j - 1] = self.K[j - 1, i - 1] = value


def _su11_photons(M: int, p: InterferometerParams) -> PhotonCovariance:
    mu1, nu1, mu2, nu2 = p.mu1, p.nu1, p.mu2, p.nu2
    V1, V2, c1, c2 = p.V1, p.V2, p.c1, p.c2
    centre_m = (V1 * V2 - 1) / 2
    centre_k = (V1**2 * V2**2 - 1) / 4
    head1_k = mu1**4 * nu2**4 + mu1**2 * nu2**2
    # thermal marginal n(n+1) with n = mu1^2 mu2^2 - 1
    head2_k = mu1**4 * mu2**4 - mu1**2 * mu2**2
    odd_M = M % 2 == 1
    if M == 2:
        return PhotonCovariance([nu2**2, nu2**2], np.full((2, 2), c2**2))

    head = [mu1**2 * nu2**2, mu1**2 * mu2**2 - 1]
    tail = [nu1**2] if odd_M else [mu1**2 * mu2**2 - 1, mu1**2 * nu2**2]
    m = head + [centre_m] * (M - 2 - len(tail)) + tail

    k = _Sym(M)
    for i in range(1, M + 1):
        if i == 1:
            v = head1_k
        elif i == 2:
            v = head2_k
        elif odd_M:
            v = c1**2 if i == M else centre_k
        else:
            v = {M: head1_k, M - 1: head2_k}.get(i, centre_k)
        k.set(i, i, v)
    for i in range(1, M):
        if i == 1 or (not odd_M and i == M - 1):
            v = c2**2 * mu1**4
        elif odd_M and i == M - 1:
            v = c1**2 * mu2**2
        else:
            v = V1**2 * c2**2 if i % 2 else c1**2 * mu2**4
        k.set(i, i + 1, v)
    for i in range(1, M - 1):
        k.set(i, i + 2, c1**2 * nu2**2 if (odd_M and i == M - 2) else c1**2 * c2**2)
    for i in range(1, M - 2, 2):
        k.set(i, i + 3, c1**2 * nu2**4)
    return PhotonCovariance(m, k.K)


def _su11_sub_photons(M: int, p: InterferometerParams) -> PhotonCovariance:
    V1, V2, c1, c2, mu2, nu2 = p.V1, p.V2, p.c1, p.c2, p.mu2, p.nu2
    k = _Sym(M)
    for i in range(1, M + 1):
        k.set(i, i, (V1**2 * V2**2 - 1) / 4)
    for i in range(1, M):
        k.set(i, i + 1, V1**2 * c2**2 if i % 2 else c1**2 * mu2**4)
    for i in range(1, M - 1):
        k.set(i, i + 2, c1**2 * c2**2)
    for i in range(1, M - 2, 2):
        k.set(i, i + 3, c1**2 * nu2**4)
    return PhotonCovariance([(V1 * V2 - 1) / 2] * M, k.K)


def _bs_photons(M: int, p: InterferometerParams) -> PhotonCovariance:
    mu1, nu1 = p.mu1, p.nu1
    q = mu1**4 + nu1**4 - 1
    edge_k = (mu1**4 - 1) / 4
    if M == 2:
        return PhotonCovariance([0.0, 0.0], np.zeros((2, 2)))
    if M == 3:
        K = np.array(
            [
                [edge_k, nu1**4 / 4, q / 4],
                [nu1**4 / 4, edge_k, q / 4],
                [q / 4, q / 4, q / 2],
            ]
        )
        return PhotonCovariance([nu1**2 / 2, nu1**2 / 2, nu1**2], K)

    odd_M = M % 2 == 1
    edge = {1, 2} if odd_M else {1, 2, M - 1, M}
    m = [nu1**2 / 2 if i in edge else nu1**2 for i in range(1, M + 1)]
    k = _Sym(M)
    for i in range(1, M + 1):
        k.set(i, i, edge_k if i in edge else q / 2)
    for i in range(1, M):
        if i == 1 or (not odd_M and i == M - 1):
            v = nu1**4 / 4
        elif odd_M and i == M - 1:
            v = q / 4
        else:
            v = 0.0 if i % 2 else q / 8
        k.set(i, i + 1, v)
    for i in range(1, M - 1):
        k.set(i, i + 2, q / 4 if (odd_M and i == M - 2) else q / 8)
    for i in range(1, M - 2, 2):
        k.set(i, i + 3, q / 8)
    return PhotonCovariance(m, k.K)


def _bs_sub_photons(M: int, p: InterferometerParams) -> PhotonCovariance:
    q = p.mu1**4 + p.nu1**4 - 1
    k = _Sym(M)
    for i in range(1, M + 1):
        k.set(i, i, q / 2)
    for i in range(2, M, 2):
        k.set(i, i + 1, q / 8)
    for i in range(1, M - 1):
        k.set(i, i + 2, q / 8)
    for i in range(1, M - 2, 2):
        k.set(i, i + 3, q / 8)
    return PhotonCovariance([p.nu1**2] * M, k.K)


_CLOSED = {
    Family.SU11: _su11_photons,
    Family.SU11_SUB: _su11_sub_photons,
    Family.BS: _bs_photons,
    Family.BS_SUB: _bs_sub_photons,
}


def analytic_photon_stats(
    family: Family | str, M: int, params: InterferometerParams
) -> PhotonCovariance:
    """Closed-form mean photon vector and photon covariance for a state family."""
    if M < 2:
        raise InvalidDimensionError(f"closed forms need M >= 2, got {M}")
    return _CLOSED[Family(family)](M, params)
