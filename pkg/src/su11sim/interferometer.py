"""State families of the pulse-pumped unbalanced SU(1,1) interferometer.

Each pump pulse drives OPA1 on (signal t, idler t+1) after the one-slot idler
delay and OPA2 on (idler t, signal t).  In the beam-splitter variant OPA2 is
replaced by a balanced splitter.  Mode ``k`` of timing slot ``t`` is indexed
``2t - 1`` (idler) or ``2t`` (signal).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Tuple

import numpy as np

from .gaussian import (
    GaussianError,
    GaussianState,
    InvalidDimensionError,
    apply,
    bs_matrix,
    partial_trace,
    tmsq_matrix,
    vacuum,
)


class Channel(str, enum.Enum):
    SIGNAL = "signal"
    IDLER = "idler"


class StepKind(str, enum.Enum):
    TMSQ1 = "TMSQ1"
    TMSQ2 = "TMSQ2"
    BS = "BS"


class Family(str, enum.Enum):
    SU11 = "SU11"
    SU11_SUB = "SU11_SUB"
    BS = "BS"
    BS_SUB = "BS_SUB"

    @property
    def is_subsystem(self) -> bool:
        return self in (Family.SU11_SUB, Family.BS_SUB)

    @property
    def parent(self) -> "Family":
        return {Family.SU11_SUB: Family.SU11, Family.BS_SUB: Family.BS}.get(self, self)


def mode_index(channel: Channel | str, t: int) -> int:
    if t < 1:
        raise ValueError(f"timing index must be >= 1, got {t}")
    channel = Channel(channel)
    return 2 * t - 1 if channel is Channel.IDLER else 2 * t


@dataclass(frozen=True)
class InterferometerParams:
    r1: float = 0.0
    r2: float = 0.0
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        for name in ("r1", "r2", "theta", "phi"):
            if not np.isfinite(getattr(self, name)):
                raise GaussianError(f"{name} must be finite")
        if self.r1 < 0 or self.r2 < 0:
            raise GaussianError(f"squeezing gains must be >= 0, got r1={self.r1}, r2={self.r2}")

    @property
    def mu1(self) -> float:
        return float(np.cosh(self.r1))

    @property
    def nu1(self) -> float:
        return float(np.sinh(self.r1))

    @property
    def mu2(self) -> float:
        return float(np.cosh(self.r2))

    @property
    def nu2(self) -> float:
        return float(np.sinh(self.r2))

    @property
    def V1(self) -> float:
        return self.mu1**2 + self.nu1**2

    @property
    def V2(self) -> float:
        return self.mu2**2 + self.nu2**2

    @property
    def c1(self) -> float:
        return self.mu1 * self.nu1

    @property
    def c2(self) -> float:
        return self.mu2 * self.nu2


@dataclass(frozen=True)
class Step:
    kind: StepKind
    pair: Tuple[int, int]


@dataclass(frozen=True)
class PumpSchedule:
    mode_count: int
    steps: Tuple[Step, ...]

    def __post_init__(self):
        M = self.mode_count
        if len(self.steps) != M - 1:
            raise GaussianError(f"an {M}-mode schedule needs {M - 1} steps, got {len(self.steps)}")
        last_slot = 0
        seen_opa1 = set()
        for step in self.steps:
            i, j = step.pair
            if not 1 <= i < j <= M:
                raise GaussianError(f"bad mode pair {step.pair} for M={M}")
            slot = (i + 1) // 2
            if slot < last_slot:
                raise GaussianError(f"step {step} runs after a later timing slot")
            last_slot = slot
            if step.kind is StepKind.TMSQ1:
                seen_opa1.add(i)
            elif j + 1 <= M and j not in seen_opa1:
                raise GaussianError(f"signal mode {j} meets OPA2 before OPA1")


def _schedule(M: int, second: StepKind) -> PumpSchedule:
    if M < 2:
        raise InvalidDimensionError(f"schedules need M >= 2, got {M}")
    steps = []
    for k in range(1, M, 2):
        if k + 2 <= M:
            steps.append(Step(StepKind.TMSQ1, (k + 1, k + 2)))
        steps.append(Step(second, (k, k + 1)))
    return PumpSchedule(M, tuple(steps))


def su11_schedule(M: int) -> PumpSchedule:
    return _schedule(M, StepKind.TMSQ2)


def bs_schedule(M: int) -> PumpSchedule:
    return _schedule(M, StepKind.BS)


def step_operator(step: Step, M: int, params: InterferometerParams):
    i, j = step.pair
    if step.kind is StepKind.TMSQ1:
        # OPA1's pump phase is the reference, so only OPA2 carries theta
        return tmsq_matrix(M, i, j, params.r1, 0.0)
    if step.kind is StepKind.TMSQ2:
        return tmsq_matrix(M, i, j, params.r2, params.theta)
    return bs_matrix(M, i, j, params.phi)


def run_schedule(schedule: PumpSchedule, params: InterferometerParams) -> GaussianState:
    M = schedule.mode_count
    return reduce(
        lambda state, step: apply(step_operator(step, M, params), state),
        schedule.steps,
        vacuum(M),
    )


def build_rho(M: int, params: InterferometerParams) -> GaussianState:
    return run_schedule(su11_schedule(M), params)


def build_rho_bs(M: int, params: InterferometerParams) -> GaussianState:
    return run_schedule(bs_schedule(M), params)


def _middle(state: GaussianState, M: int) -> GaussianState:
    return partial_trace(state, list(range(3, M + 3)))


def build_rho_s(M: int, params: InterferometerParams) -> GaussianState:
    if M < 2:
        raise InvalidDimensionError(f"M must be >= 2, got {M}")
    return _middle(build_rho(M + 4, params), M)


def build_rho_bs_s(M: int, params: InterferometerParams) -> GaussianState:
    if M < 2:
        raise InvalidDimensionError(f"M must be >= 2, got {M}")
    return _middle(build_rho_bs(M + 4, params), M)


def build_balanced_su11(params: InterferometerParams) -> GaussianState:
    """Both amplifiers on the same pair with no delay: TMSQ(r2, theta) after TMSQ(r1, theta)."""
    state = apply(tmsq_matrix(2, 1, 2, params.r1, params.theta), vacuum(2))
    return apply(tmsq_matrix(2, 1, 2, params.r2, params.theta), state)


_BUILDERS = {
    Family.SU11: build_rho,
    Family.SU11_SUB: build_rho_s,
    Family.BS: build_rho_bs,
    Family.BS_SUB: build_rho_bs_s,
}


def build(family: Family | str, M: int, params: InterferometerParams) -> GaussianState:
    return _BUILDERS[Family(family)](M, params)


BALANCED = "BALANCED"


def state_builder(family: Family | str, M: int, theta: float = 0.0, phi: float = 0.0):
    """Return ``(r1, r2) -> GaussianState`` for a family, or for the two-mode balanced benchmark."""
    if str(family).upper() == BALANCED:
        return lambda r1, r2: build_balanced_su11(InterferometerParams(r1, r2, theta, phi))
    family = Family(family)
    return lambda r1, r2: build(family, M, InterferometerParams(r1, r2, theta, phi))
