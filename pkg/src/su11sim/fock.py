"""Truncated Fock-space simulator used as an independent oracle.

Amplitudes live in a dense tensor with one axis of length ``cutoff + 1`` per
mode.  A two-mode gate is the matrix exponential of its generator on a padded
local space, restricted to the truncated block, so probability that would
leave the truncated space is lost rather than folded back.  The accumulated
loss ``1 - ||psi||^2`` is reported as the truncation deficit and the state is
never renormalised.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from scipy.linalg import expm, logm

from .gaussian import GaussianError, GaussianState, InvalidModeError, bs_matrix
from .interferometer import (
    Family,
    InterferometerParams,
    StepKind,
    bs_schedule,
    su11_schedule,
)
from .photon import PhotonCovariance

MAX_AMPLITUDES = 5_000_000
DEFICIT_LIMIT = 1e-6
PAD = 8


class TruncationError(GaussianError):
    pass


@dataclass(frozen=True)
class FockState:
    mode_count: int
    cutoff: int
    amplitudes: np.ndarray  # shape (cutoff + 1,) * mode_count

    @property
    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    @property
    def deficit(self) -> float:
        return max(0.0, 1.0 - self.norm_sq)


def _check_size(M: int, cutoff: int) -> None:
    if M < 1:
        raise InvalidModeError(f"mode count must be >= 1, got {M}")
    if cutoff < 2:
        raise GaussianError(f"cutoff must be >= 2, got {cutoff}")
    if (cutoff + 1) ** M > MAX_AMPLITUDES:
        raise GaussianError(
            f"{M} modes at cutoff {cutoff} need {(cutoff + 1) ** M} amplitudes (> {MAX_AMPLITUDES})"
        )


def fock_vacuum(M: int, cutoff: int) -> FockState:
    _check_size(M, cutoff)
    psi = np.zeros((cutoff + 1,) * M, dtype=complex)
    psi[(0,) * M] = 1.0
    return FockState(M, cutoff, psi)


def _ladder(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, dim)), 1).astype(complex)


@lru_cache(maxsize=64)
def _two_mode_gate(kind: str, args: Tuple[float, ...], cutoff: int) -> np.ndarray:
    """Truncated block of ``exp(G)`` for a two-mode generator ``G``, as a 4-index tensor."""
    D = cutoff + 1 + PAD
    a = _ladder(D)
    I = np.eye(D)
    a1, a2 = np.kron(a, I), np.kron(I, a)
    if kind == "tmsq":
        r, theta = args
        g = r * np.exp(1j * theta) * a1.conj().T @ a2.conj().T
        G = g - g.conj().T
    else:
        # passive gate with U^dag a U = S a needs G = sum_kl log(S)_kl a_k^dag a_l
        (phi,) = args
        L = logm(bs_matrix(2, 1, 2, phi).block_SA)
        ops = (a1, a2)
        G = sum(L[k, l] * ops[k].conj().T @ ops[l] for k in range(2) for l in range(2))
    U = expm(G).reshape(D, D, D, D)
    c = cutoff + 1
    return np.ascontiguousarray(U[:c, :c, :c, :c])


def _apply_gate(state: FockState, i: int, j: int, gate: np.ndarray) -> FockState:
    M = state.mode_count
    if not (1 <= i <= M and 1 <= j <= M) or i == j:
        raise InvalidModeError(f"bad mode pair ({i}, {j}) for {M} modes")
    psi = np.moveaxis(state.amplitudes, (i - 1, j - 1), (0, 1))
    c = state.cutoff + 1
    out = gate.reshape(c * c, c * c) @ psi.reshape(c * c, -1)
    out = np.moveaxis(out.reshape(psi.shape), (0, 1), (i - 1, j - 1))
    new = replace(state, amplitudes=np.ascontiguousarray(out))
    if new.deficit > DEFICIT_LIMIT:
        raise TruncationError(
            f"truncation deficit {new.deficit:.3e} exceeds {DEFICIT_LIMIT:g}; raise the cutoff"
        )
    return new


def fock_tmsq(state: FockState, i: int, j: int, r: float, theta: float = 0.0) -> FockState:
    """Apply ``exp[r (e^{i theta} a_i^dag a_j^dag - h.c.)]``."""
    return _apply_gate(state, i, j, _two_mode_gate("tmsq", (float(r), float(theta)), state.cutoff))


def fock_bs(state: FockState, i: int, j: int, phi: float = 0.0) -> FockState:
    """Apply the balanced splitter whose mode map matches ``bs_matrix``."""
    return _apply_gate(state, i, j, _two_mode_gate("bs", (float(phi),), state.cutoff))


def fock_displace(state: FockState, k: int, alpha: complex) -> FockState:
    """Apply the single-mode displacement ``exp(alpha a^dag - alpha* a)``."""
    D = state.cutoff + 1 + PAD
    a = _ladder(D)
    c = state.cutoff + 1
    U = expm(alpha * a.conj().T - np.conj(alpha) * a)[:c, :c]
    psi = np.moveaxis(state.amplitudes, k - 1, 0)
    out = np.moveaxis((U @ psi.reshape(c, -1)).reshape(psi.shape), 0, k - 1)
    new = replace(state, amplitudes=np.ascontiguousarray(out))
    if new.deficit > DEFICIT_LIMIT:
        raise TruncationError(f"truncation deficit {new.deficit:.3e} exceeds {DEFICIT_LIMIT:g}")
    return new


def _lower(psi: np.ndarray, axis: int) -> np.ndarray:
    """Annihilation operator on one axis of the amplitude tensor."""
    c = psi.shape[axis]
    moved = np.moveaxis(psi, axis, 0)
    out = np.zeros_like(moved)
    out[:-1] = moved[1:] * np.sqrt(np.arange(1, c)).reshape((-1,) + (1,) * (psi.ndim - 1))
    return np.moveaxis(out, 0, axis)


def fock_cm(state: FockState, modes: Sequence[int] | None = None) -> GaussianState:
    """Complex-basis CM and mean field estimated from Fock-space expectations.

    ``modes`` (1-based) selects a subsystem; by default all modes are used.
    """
    if state.deficit > DEFICIT_LIMIT:
        raise TruncationError(f"truncation deficit {state.deficit:.3e} exceeds {DEFICIT_LIMIT:g}")
    modes = list(range(1, state.mode_count + 1)) if modes is None else list(modes)
    psi = state.amplitudes
    lowered = [_lower(psi, m - 1) for m in modes]
    n = len(modes)
    d = np.array([np.vdot(psi, x) for x in lowered])
    N = np.empty((n, n), dtype=complex)  # N_ij = <a_j^dag a_i>
    P = np.empty((n, n), dtype=complex)  # P_ij = <a_i a_j>
    for i in range(n):
        for j in range(n):
            N[i, j] = np.vdot(lowered[j], lowered[i])
            P[i, j] = np.vdot(psi, _lower(lowered[j], modes[i] - 1))
    A = np.eye(n) + 2 * (N - np.outer(d, d.conj()))
    B = 2 * (P - np.outer(d, d))
    return GaussianState.from_sigma_c(
        np.block([[A, B], [B.conj(), A.conj()]]), np.concatenate([d, d.conj()])
    )


def fock_photon_stats(state: FockState, modes: Sequence[int] | None = None) -> PhotonCovariance:
    modes = list(range(1, state.mode_count + 1)) if modes is None else list(modes)
    prob = np.abs(state.amplitudes) ** 2
    occupation = np.arange(state.cutoff + 1, dtype=float)
    n_ops = []
    for m in modes:
        shape = [1] * state.mode_count
        shape[m - 1] = -1
        n_ops.append(occupation.reshape(shape))
    mean = np.array([np.sum(prob * n) for n in n_ops])
    second = np.array([[np.sum(prob * ni * nj) for nj in n_ops] for ni in n_ops])
    return PhotonCovariance(mean, second - np.outer(mean, mean))


# family states ------------------------------------------------------------------


def _light_cone(steps, keep: set) -> Tuple[list, set]:
    """Drop steps that cannot influence ``keep``; return kept steps and touched modes."""
    relevant = set(keep)
    kept = []
    for step in reversed(steps):
        if relevant & set(step.pair):
            relevant |= set(step.pair)
            kept.append(step)
    return kept[::-1], relevant


@dataclass(frozen=True)
class OracleResult:
    cm: GaussianState
    photons: PhotonCovariance
    deficit: float
    simulated_modes: int


def fock_family(
    family: Family | str, M: int, params: InterferometerParams, cutoff: int = 12
) -> OracleResult:
    """Simulate a state family in Fock space and return its CM and photon statistics.

    Subsystem families start from the ``M + 4`` mode train; only pump steps in
    the backward light cone of the kept modes are simulated.
    """
    family = Family(family)
    total = M + 4 if family.is_subsystem else M
    keep = set(range(3, M + 3)) if family.is_subsystem else set(range(1, M + 1))
    schedule = su11_schedule(total) if family.parent is Family.SU11 else bs_schedule(total)
    steps, relevant = _light_cone(schedule.steps, keep)
    order = sorted(relevant)
    local = {mode: k + 1 for k, mode in enumerate(order)}
    state = fock_vacuum(len(order), cutoff)
    for step in steps:
        i, j = (local[m] for m in step.pair)
        if step.kind is StepKind.TMSQ1:
            state = fock_tmsq(state, i, j, params.r1, 0.0)
        elif step.kind is StepKind.TMSQ2:
            state = fock_tmsq(state, i, j, params.r2, params.theta)
        else:
            state = fock_bs(state, i, j, params.phi)
    kept = [local[m] for m in sorted(keep)]
    return OracleResult(
        fock_cm(state, kept), fock_photon_stats(state, kept), state.deficit, len(order)
    )
