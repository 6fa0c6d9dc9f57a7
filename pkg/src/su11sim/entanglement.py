"""Quadrature variances and PPT entanglement classification over bipartitions."""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Tuple

import numpy as np

from .gaussian import (
    DimensionMismatchError,
    GaussianError,
    GaussianState,
    QuadratureCM,
    to_quadrature,
)

NEGATIVITY_EPS = 1e-9
PAIRING_TOL = 1e-8
V_SV = 0.5


class InvalidBipartitionError(GaussianError):
    pass


@dataclass(frozen=True)
class Bipartition:
    universe: int
    set_A: Tuple[int, ...]
    set_B: Tuple[int, ...]

    def __post_init__(self):
        A = tuple(sorted(int(a) for a in self.set_A))
        B = tuple(sorted(int(b) for b in self.set_B))
        if not A or not B:
            raise InvalidBipartitionError("both parties must be non-empty")
        if len(set(A)) != len(A) or len(set(B)) != len(B) or set(A) & set(B):
            raise InvalidBipartitionError(f"parties overlap or repeat modes: {A} | {B}")
        if min(A + B) < 1 or max(A + B) > self.universe:
            raise InvalidBipartitionError(f"modes outside 1..{self.universe}: {A} | {B}")
        object.__setattr__(self, "set_A", A)
        object.__setattr__(self, "set_B", B)

    @property
    def id(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}"
        return f"A={fmt(self.set_A)}|B={fmt(self.set_B)}"

    @property
    def is_canonical(self) -> bool:
        return self.set_A[0] < self.set_B[0]

    @property
    def covers_all(self) -> bool:
        return len(self.set_A) + len(self.set_B) == self.universe

    def canonical(self) -> "Bipartition":
        return self if self.is_canonical else self.swapped()

    def swapped(self) -> "Bipartition":
        return Bipartition(self.universe, self.set_B, self.set_A)

    @classmethod
    def parse(cls, text: str, universe: int) -> "Bipartition":
        """Parse ``"A={1,3}|B={2}"`` or the short form ``"1,3|2"``."""
        try:
            left, right = text.split("|")
            parts = []
            for side in (left, right):
                side = side.strip()
                if "=" in side:
                    side = side.split("=", 1)[1]
                side = side.strip().strip("{}")
                parts.append(tuple(int(x) for x in side.split(",") if x.strip()))
        except ValueError as exc:
            raise InvalidBipartitionError(f"cannot parse bipartition {text!r}") from exc
        return cls(universe, parts[0], parts[1])


@dataclass(frozen=True)
class SymplecticSpectrum:
    eigenvalues: np.ndarray

    def __post_init__(self):
        ev = np.sort(np.asarray(self.eigenvalues, dtype=float))
        if ev.size == 0 or np.any(ev <= 0):
            raise GaussianError("symplectic eigenvalues must be positive")
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)

    @property
    def minimum(self) -> float:
        return float(self.eigenvalues[0])


class Verdict(str, enum.Enum):
    ALWAYS = "always"
    PARTIAL = "partial"
    NONE = "none"


@dataclass(frozen=True)
class NegativityVerdict:
    bipartition: Bipartition
    verdict: Verdict
    witnesses: Tuple[Tuple[float, float, float], ...]

    @property
    def min_lmu(self) -> float:
        return min(w[2] for w in self.witnesses)

    @property
    def max_lmu(self) -> float:
        return max(w[2] for w in self.witnesses)


# quadrature variances ---------------------------------------------------------


def quad_lc_variance(state: GaussianState, weights) -> float:
    """``1/2 w^T sigma w`` over interleaved (X1, P1, ...) weights."""
    w = np.asarray(weights, dtype=float).reshape(-1)
    sigma = to_quadrature(state).matrix
    if w.size != sigma.shape[0]:
        raise DimensionMismatchError(f"expected {sigma.shape[0]} weights, got {w.size}")
    return max(0.0, 0.5 * float(w @ sigma @ w))


def min_quad_variance(state: GaussianState) -> Tuple[float, np.ndarray]:
    """Minimum of ``1/2 w^T sigma w`` over unit vectors, with its minimiser."""
    vals, vecs = np.linalg.eigh(to_quadrature(state).matrix)
    return 0.5 * float(vals[0]), vecs[:, 0]


def x_weights(signs: Sequence[float]) -> np.ndarray:
    w = np.zeros(2 * len(signs))
    w[0::2] = signs
    return w


def p_weights(signs: Sequence[float]) -> np.ndarray:
    w = np.zeros(2 * len(signs))
    w[1::2] = signs
    return w


# PPT ---------------------------------------------------------------------------


def _quadrature_index(modes: Iterable[int]) -> list:
    return [q for m in modes for q in (2 * (m - 1), 2 * (m - 1) + 1)]


def ppt_rearrange(state: GaussianState, bipartition: Bipartition) -> QuadratureCM:
    """Quadrature CM of the modes in ``A`` then ``B``; other modes are traced out."""
    if bipartition.universe != state.mode_count:
        raise InvalidBipartitionError(
            f"bipartition over {bipartition.universe} modes, state has {state.mode_count}"
        )
    return _rearrange(to_quadrature(state).matrix, bipartition)


def _rearrange(sigma: np.ndarray, bipartition: Bipartition) -> QuadratureCM:
    idx = _quadrature_index(bipartition.set_A + bipartition.set_B)
    return QuadratureCM(sigma[np.ix_(idx, idx)])


def partial_transpose(sigma_prime: QuadratureCM | np.ndarray, n_A: int, n_B: int) -> QuadratureCM:
    """Flip the sign of every momentum of the first ``n_A`` modes."""
    m = sigma_prime.matrix if isinstance(sigma_prime, QuadratureCM) else np.asarray(sigma_prime)
    if n_A < 1 or n_B < 0:
        raise InvalidBipartitionError("partial transpose needs n_A >= 1")
    if m.shape != (2 * (n_A + n_B),) * 2:
        raise DimensionMismatchError(f"matrix {m.shape} does not match n_A={n_A}, n_B={n_B}")
    theta = np.ones(m.shape[0])
    theta[1 : 2 * n_A : 2] = -1
    return QuadratureCM(theta[:, None] * m * theta[None, :])


@lru_cache(maxsize=None)
def _omega(n: int) -> np.ndarray:
    om = np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))
    om.setflags(write=False)
    return om


def symplectic_form(n: int) -> np.ndarray:
    return _omega(n).copy()


def symplectic_eigenvalues(sigma: QuadratureCM | np.ndarray) -> SymplecticSpectrum:
    """Moduli of the eigenvalues of ``i Omega sigma``, one per ``+-`` pair.

    The spectrum is taken from the Hermitian similar matrix ``i L^T Omega L``
    with ``sigma = L L^T``, which keeps small eigenvalues accurate.
    """
    m = sigma.matrix if isinstance(sigma, QuadratureCM) else np.asarray(sigma, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise DimensionMismatchError(f"expected a 2n x 2n matrix, got {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.T)) > 1e-12 * scale:
        raise GaussianError("covariance matrix is not symmetric")
    m = (m + m.T) / 2
    try:
        L = np.linalg.cholesky(m)
    except np.linalg.LinAlgError as exc:
        raise GaussianError("covariance matrix is not positive definite") from exc
    n = m.shape[0] // 2
    ev = np.linalg.eigvalsh(1j * (L.T @ _omega(n) @ L))
    neg, pos = -ev[:n][::-1], ev[n:]
    if np.max(np.abs(neg - pos)) > PAIRING_TOL * max(1.0, float(pos[-1])):
        raise GaussianError("symplectic eigenvalues did not pair up")
    return SymplecticSpectrum((neg + pos) / 2)


def log_min_ppt(state: GaussianState, bipartition: Bipartition) -> float:
    """``log10`` of the smallest symplectic eigenvalue of the partially transposed CM."""
    return _lmu(ppt_rearrange(state, bipartition), bipartition)


def _lmu(sigma_prime: QuadratureCM, bipartition: Bipartition) -> float:
    tilde = partial_transpose(sigma_prime, len(bipartition.set_A), len(bipartition.set_B))
    return float(np.log10(symplectic_eigenvalues(tilde).minimum))


# enumeration and scans ------------------------------------------------------------


def enumerate_bipartitions(M: int, require_cover: bool = False) -> list:
    """All canonical bipartitions of ``{1..M}``, ordered by (|A|+|B|, A, B)."""
    if M < 2:
        raise InvalidBipartitionError(f"need at least 2 modes, got {M}")
    out = []
    # label each mode 0 (unused), 1 (A) or 2 (B)
    for labels in itertools.product((0, 1, 2), repeat=M):
        A = tuple(k + 1 for k, l in enumerate(labels) if l == 1)
        B = tuple(k + 1 for k, l in enumerate(labels) if l == 2)
        if not A or not B or A[0] > B[0]:
            continue
        if require_cover and len(A) + len(B) != M:
            continue
        out.append(Bipartition(M, A, B))
    out.sort(key=lambda b: (len(b.set_A) + len(b.set_B), b.set_A, b.set_B))
    return out


def default_grid() -> np.ndarray:
    return np.round(0.1 * np.arange(1, 21), 10)


@dataclass(frozen=True)
class ScanResult:
    r1_values: np.ndarray
    r2_values: np.ndarray
    bipartitions: Tuple[Bipartition, ...]
    lmu: np.ndarray  # shape (len(r1), len(r2), len(bipartitions))

    def rows(self):
        """``(r1, r2, bipartition_id, L_mu)`` in r1-major, r2, then bipartition order."""
        for a, r1 in enumerate(self.r1_values):
            for b, r2 in enumerate(self.r2_values):
                for c, bip in enumerate(self.bipartitions):
                    yield float(r1), float(r2), bip.id, float(self.lmu[a, b, c])

    def verdicts(self, eps: float = NEGATIVITY_EPS) -> list:
        out = []
        for c, bip in enumerate(self.bipartitions):
            grid = self.lmu[:, :, c]
            witnesses = tuple(
                (float(r1), float(r2), float(grid[a, b]))
                for a, r1 in enumerate(self.r1_values)
                for b, r2 in enumerate(self.r2_values)
            )
            out.append(NegativityVerdict(bip, _verdict(grid, eps), witnesses))
        return out


def _verdict(values: np.ndarray, eps: float) -> Verdict:
    if np.all(values < -eps):
        return Verdict.ALWAYS
    if np.all(values >= -eps):
        return Verdict.NONE
    return Verdict.PARTIAL


def scan_lmu(
    state_fn: Callable[[float, float], GaussianState],
    bipartitions: Sequence[Bipartition],
    r1_values: Sequence[float],
    r2_values: Sequence[float] | None = None,
    workers: int = 1,
) -> ScanResult:
    """Evaluate ``L_mu`` for every bipartition at every ``(r1, r2)`` grid point.

    Grid points are independent; with ``workers > 1`` they run on a thread pool
    and results are written back by grid index, so the output does not depend
    on scheduling.
    """
    r1_values = np.asarray(r1_values, dtype=float)
    r2_values = r1_values if r2_values is None else np.asarray(r2_values, dtype=float)
    bipartitions = tuple(bipartitions)
    if r1_values.size == 0 or r2_values.size == 0:
        raise ValueError("grid is empty")
    if not bipartitions:
        raise ValueError("no bipartitions to scan")
    lmu = np.empty((r1_values.size, r2_values.size, len(bipartitions)))

    def task(ab):
        a, b = ab
        state = state_fn(float(r1_values[a]), float(r2_values[b]))
        for bip in bipartitions:
            if bip.universe != state.mode_count:
                raise InvalidBipartitionError(f"{bip.id} does not fit a {state.mode_count}-mode state")
        sigma = to_quadrature(state).matrix
        return ab, [_lmu(_rearrange(sigma, bip), bip) for bip in bipartitions]

    points = list(itertools.product(range(r1_values.size), range(r2_values.size)))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(task, points))
    else:
        results = map(task, points)
    for (a, b), values in results:
        lmu[a, b, :] = values
    return ScanResult(r1_values, r2_values, bipartitions, lmu)


def classify_negativity(
    state_fn: Callable[[float, float], GaussianState],
    bipartition: Bipartition,
    r1_values: Sequence[float] | None = None,
    r2_values: Sequence[float] | None = None,
    eps: float = NEGATIVITY_EPS,
) -> NegativityVerdict:
    r1_values = default_grid() if r1_values is None else r1_values
    if np.any(np.asarray(r1_values) <= 0) or (r2_values is not None and np.any(np.asarray(r2_values) <= 0)):
        raise ValueError("classification grids must exclude r = 0")
    return scan_lmu(state_fn, [bipartition], r1_values, r2_values).verdicts(eps)[0]


def slot_quartets(M: int) -> list:
    """Mode sets made of the idler and signal modes of two adjacent timing slots."""
    return [set(range(k, k + 4)) for k in range(1, M - 2, 2)]


def negativity_conditions(bipartition: Bipartition) -> Tuple[bool, bool]:
    """Heuristic sufficient conditions for negativity, for exploratory comparison.

    The first holds when ``A`` and ``B`` jointly contain both modes of two
    adjacent timing slots and each party holds at least one of them.  The
    second holds when the parties have sizes 2 and 3.
    """
    A, B = set(bipartition.set_A), set(bipartition.set_B)
    first = any(q <= A | B and q & A and q & B for q in slot_quartets(bipartition.universe))
    second = sorted((len(A), len(B))) == [2, 3]
    return bool(first), second
