"""Zero-mean Gaussian states in the complex (ladder-operator) basis.

Conventions
-----------
* Complex basis ordering is ``[a_1 .. a_M, a_1^dag .. a_M^dag]`` and the
  covariance matrix is ``sigma_c = [[A, B], [B*, A*]]`` with
  ``A_ij = <{a_i, a_j^dag}>`` and ``B_ij = <{a_i, a_j}>``.
* The vacuum has ``A = I`` and ``B = 0``; its quadrature covariance matrix is
  the identity, so physical states have symplectic eigenvalues >= 1.
* Quadratures are interleaved ``(X1, P1, X2, P2, ...)`` with
  ``X = (a + a^dag)/sqrt(2)`` and ``P = i(a^dag - a)/sqrt(2)``.
* Mode indices in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

HERMITICITY_TOL = 1e-12


class GaussianError(ValueError):
    """Base class for invalid Gaussian-state arguments."""


class InvalidDimensionError(GaussianError):
    pass


class InvalidModeError(GaussianError):
    pass


class DimensionMismatchError(GaussianError):
    pass


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


def _scaled_tol(*arrays: np.ndarray) -> float:
    scale = max([1.0] + [float(np.max(np.abs(a))) for a in arrays if a.size])
    return HERMITICITY_TOL * scale


@dataclass(frozen=True)
class GaussianState:
    """Immutable ``M``-mode Gaussian state (complex-basis covariance + displacement)."""

    block_A: np.ndarray
    block_B: np.ndarray
    displacement: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        A = _frozen(self.block_A)
        B = _frozen(self.block_B)
        if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
            raise InvalidDimensionError(f"block_A must be a non-empty square matrix, got {A.shape}")
        if B.shape != A.shape:
            raise DimensionMismatchError(f"block_B shape {B.shape} != block_A shape {A.shape}")
        M = A.shape[0]
        d = np.zeros(2 * M, dtype=complex) if self.displacement is None else self.displacement
        d = _frozen(d).reshape(-1)
        if d.shape != (2 * M,):
            raise DimensionMismatchError(f"displacement must have length {2 * M}, got {d.shape}")
        tol = _scaled_tol(A, B)
        if np.max(np.abs(A - A.conj().T)) > tol:
            raise GaussianError("block_A is not Hermitian")
        if np.max(np.abs(B - B.T)) > tol:
            raise GaussianError("block_B is not symmetric")
        object.__setattr__(self, "block_A", A)
        object.__setattr__(self, "block_B", B)
        object.__setattr__(self, "displacement", d)

    @property
    def mode_count(self) -> int:
        return self.block_A.shape[0]

    @property
    def sigma_c(self) -> np.ndarray:
        A, B = self.block_A, self.block_B
        return np.block([[A, B], [B.conj(), A.conj()]])

    @property
    def mean_field(self) -> np.ndarray:
        """The length-``M`` vector of ``<a_i>``."""
        return np.asarray(self.displacement[: self.mode_count])

    @classmethod
    def from_sigma_c(cls, sigma_c: np.ndarray, displacement=None) -> "GaussianState":
        sigma_c = np.asarray(sigma_c, dtype=complex)
        M = sigma_c.shape[0] // 2
        A = sigma_c[:M, :M]
        B = sigma_c[:M, M:]
        # suppress round-off drift before validation
        return cls((A + A.conj().T) / 2, (B + B.T) / 2, displacement)

    def allclose(self, other: "GaussianState", atol: float = 1e-12) -> bool:
        return (
            self.mode_count == other.mode_count
            and np.allclose(self.block_A, other.block_A, rtol=0, atol=atol)
            and np.allclose(self.block_B, other.block_B, rtol=0, atol=atol)
            and np.allclose(self.displacement, other.displacement, rtol=0, atol=atol)
        )

    def max_deviation(self, other: "GaussianState") -> float:
        if self.mode_count != other.mode_count:
            raise DimensionMismatchError("states have different mode counts")
        return float(np.max(np.abs(self.sigma_c - other.sigma_c)))


@dataclass(frozen=True)
class SymplecticOp:
    """Bogoliubov map ``xi -> S xi`` with ``S = [[S_A, S_B], [S_B*, S_A*]]``."""

    block_SA: np.ndarray
    block_SB: np.ndarray

    def __post_init__(self):
        SA = _frozen(self.block_SA)
        SB = _frozen(self.block_SB)
        if SA.ndim != 2 or SA.shape[0] != SA.shape[1] or SA.shape != SB.shape:
            raise InvalidDimensionError(f"bad symplectic blocks {SA.shape}, {SB.shape}")
        object.__setattr__(self, "block_SA", SA)
        object.__setattr__(self, "block_SB", SB)

    @property
    def mode_count(self) -> int:
        return self.block_SA.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        SA, SB = self.block_SA, self.block_SB
        return np.block([[SA, SB], [SB.conj(), SA.conj()]])

    def metric_error(self) -> float:
        """``max|S K S^dag - K|`` for ``K = diag(I, -I)``."""
        K = bosonic_metric(self.mode_count)
        S = self.matrix
        return float(np.max(np.abs(S @ K @ S.conj().T - K)))

    def inverse(self) -> "SymplecticOp":
        # S^-1 = K S^dag K for any matrix preserving K
        SA, SB = self.block_SA, self.block_SB
        return SymplecticOp(SA.conj().T, -SB.T)

    def compose(self, other: "SymplecticOp") -> "SymplecticOp":
        """Return the map that applies ``other`` first, then ``self``."""
        if other.mode_count != self.mode_count:
            raise DimensionMismatchError("cannot compose operators on different mode counts")
        S = self.matrix @ other.matrix
        M = self.mode_count
        return SymplecticOp(S[:M, :M], S[:M, M:])


@dataclass(frozen=True)
class QuadratureCM:
    """Real symmetric ``2M x 2M`` covariance matrix in interleaved (X, P) order."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise InvalidDimensionError(f"quadrature CM must be 2M x 2M, got {m.shape}")
        if np.max(np.abs(m - m.T)) > _scaled_tol(m):
            raise GaussianError("quadrature CM is not symmetric")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def mode_count(self) -> int:
        return self.matrix.shape[0] // 2


def bosonic_metric(M: int) -> np.ndarray:
    return np.diag(np.concatenate([np.ones(M), -np.ones(M)])).astype(complex)


def _check_modes(M: int, *modes: int) -> None:
    for m in modes:
        if not 1 <= m <= M:
            raise InvalidModeError(f"mode index {m} outside 1..{M}")
    if len(set(modes)) != len(modes):
        raise InvalidModeError(f"mode indices must be distinct, got {modes}")


def vacuum(M: int) -> GaussianState:
    if M < 1:
        raise InvalidDimensionError(f"mode count must be >= 1, got {M}")
    return GaussianState(np.eye(M), np.zeros((M, M)))


def identity_op(M: int) -> SymplecticOp:
    if M < 1:
        raise InvalidDimensionError(f"mode count must be >= 1, got {M}")
    return SymplecticOp(np.eye(M), np.zeros((M, M)))


def tmsq_matrix(M: int, i: int, j: int, r: float, theta: float = 0.0) -> SymplecticOp:
    """Two-mode squeezer of gain ``r`` and angle ``theta`` acting on modes ``i``, ``j``."""
    _check_modes(M, i, j)
    SA = np.eye(M, dtype=complex)
    SB = np.zeros((M, M), dtype=complex)
    SA[i - 1, i - 1] = SA[j - 1, j - 1] = np.cosh(r)
    SB[i - 1, j - 1] = SB[j - 1, i - 1] = np.sinh(r) * np.exp(1j * theta)
    return SymplecticOp(SA, SB)


def bs_matrix(M: int, i: int, j: int, phi: float = 0.0) -> SymplecticOp:
    """Balanced beam splitter on modes ``i``, ``j`` with the phase ``phi`` on input ``i``.

    ``a_i -> (e^{i phi} a_i - a_j)/sqrt(2)``, ``a_j -> (e^{i phi} a_i + a_j)/sqrt(2)``.
    """
    _check_modes(M, i, j)
    s = 1 / np.sqrt(2)
    e = np.exp(1j * phi)
    SA = np.eye(M, dtype=complex)
    SA[i - 1, i - 1] = e * s
    SA[i - 1, j - 1] = -s
    SA[j - 1, i - 1] = e * s
    SA[j - 1, j - 1] = s
    return SymplecticOp(SA, np.zeros((M, M), dtype=complex))


def apply(op: SymplecticOp, state: GaussianState) -> GaussianState:
    """Evolve ``sigma_c -> S sigma_c S^dag`` and ``d -> S d``."""
    if op.mode_count != state.mode_count:
        raise DimensionMismatchError(
            f"operator acts on {op.mode_count} modes, state has {state.mode_count}"
        )
    S = op.matrix
    sigma = S @ state.sigma_c @ S.conj().T
    return GaussianState.from_sigma_c(sigma, S @ state.displacement)


def partial_trace(state: GaussianState, keep: Sequence[int]) -> GaussianState:
    """Marginal over the 1-based modes in ``keep`` (strictly increasing)."""
    keep = [int(k) for k in keep]
    if not keep:
        raise InvalidModeError("keep list is empty")
    if any(b <= a for a, b in zip(keep, keep[1:])):
        raise InvalidModeError(f"keep list must be strictly increasing, got {keep}")
    _check_modes(state.mode_count, *keep)
    idx = np.array(keep) - 1
    M = state.mode_count
    d = state.displacement
    return GaussianState(
        state.block_A[np.ix_(idx, idx)],
        state.block_B[np.ix_(idx, idx)],
        np.concatenate([d[idx], d[M + idx]]),
    )


def basis_change(M: int) -> np.ndarray:
    """Unitary ``W`` with ``q = W xi`` for interleaved quadratures ``q``."""
    s = 1 / np.sqrt(2)
    W = np.zeros((2 * M, 2 * M), dtype=complex)
    for k in range(M):
        W[2 * k, k] = s
        W[2 * k, M + k] = s
        W[2 * k + 1, k] = -1j * s
        W[2 * k + 1, M + k] = 1j * s
    return W


def to_quadrature(state: GaussianState) -> QuadratureCM:
    W = basis_change(state.mode_count)
    sigma = W @ state.sigma_c @ W.conj().T
    if np.max(np.abs(sigma.imag)) > _scaled_tol(sigma.real):
        raise GaussianError("quadrature covariance has a non-negligible imaginary part")
    # same matrix as W sigma_c W^dag, written entrywise so the vacuum maps to I exactly
    A, B = state.block_A, state.block_B
    M = state.mode_count
    out = np.empty((2 * M, 2 * M))
    out[0::2, 0::2] = (A + B).real
    out[1::2, 1::2] = (A - B).real
    out[0::2, 1::2] = (B - A).imag
    out[1::2, 0::2] = (B + A).imag
    return QuadratureCM((out + out.T) / 2)


def quadrature_displacement(state: GaussianState) -> np.ndarray:
    """Interleaved ``(<X1>, <P1>, ...)`` mean vector."""
    return (basis_change(state.mode_count) @ state.displacement).real
