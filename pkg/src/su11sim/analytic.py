"""Closed-form covariance matrices for the four state families.

This is a second code path, independent of the schedule builders: every entry
is written down directly from the parameters.  Small mode counts use explicit
literal matrices; larger ones use piecewise index rules in which the
``sin^2(k pi/2)`` / ``cos^2(k pi/2)`` selectors are integer parity tests.

Indices inside the rule functions are 1-based to keep them readable.
"""

from __future__ import annotations

import numpy as np

from .gaussian import GaussianState, InvalidDimensionError
from .interferometer import Family, InterferometerParams, build


def _odd(k: int) -> bool:
    return k % 2 == 1


class _Blocks:
    def __init__(self, M: int):
        self.M = M
        self.A = np.zeros((M, M), dtype=complex)
        self.B = np.zeros((M, M), dtype=complex)

    def diag(self, k: int, value) -> None:
        self.A[k - 1, k - 1] = value

    def a(self, i: int, j: int, value) -> None:
        self.A[i - 1, j - 1] = value
        self.A[j - 1, i - 1] = np.conj(value)

    def b(self, i: int, j: int, value) -> None:
        self.B[i - 1, j - 1] = value
        self.B[j - 1, i - 1] = value

    def state(self) -> GaussianState:
        return GaussianState(self.A, self.B)


def _su11(M: int, p: InterferometerParams) -> GaussianState:
    V1, V2, c1, c2 = p.V1, p.V2, p.c1, p.c2
    mu2, nu2 = p.mu2, p.nu2
    e = np.exp(1j * p.theta)
    head1, head2 = V1 * nu2**2 + mu2**2, V1 * mu2**2 + nu2**2
    m = _Blocks(M)
    if M == 2:
        m.diag(1, V2)
        m.diag(2, V2)
        m.b(1, 2, 2 * c2 * e)
        return m.state()
    if M == 3:
        m.diag(1, head1)
        m.diag(2, head2)
        m.diag(3, V1)
        m.a(1, 3, 2 * c1 * nu2 * e)
        m.b(1, 2, c2 * (V1 + 1) * e)
        m.b(2, 3, 2 * c1 * mu2)
        return m.state()
    if M == 4:
        for k, v in zip((1, 2, 3, 4), (head1, head2, head2, head1)):
            m.diag(k, v)
        m.a(1, 3, 2 * c1 * c2 * e)
        m.a(2, 4, 2 * c1 * c2 / e)
        m.b(1, 2, c2 * (V1 + 1) * e)
        m.b(2, 3, 2 * c1 * mu2**2)
        m.b(3, 4, c2 * (V1 + 1) * e)
        m.b(1, 4, 2 * c1 * nu2**2 * e**2)
        return m.state()

    odd_M = _odd(M)
    for k in range(1, M + 1):
        if k == 1:
            v = head1
        elif k == 2:
            v = head2
        elif odd_M:
            v = V1 if k == M else V1 * V2
        else:
            v = {M: head1, M - 1: head2}.get(k, V1 * V2)
        m.diag(k, v)
    for k in range(1, M - 1):
        amp = 2 * c1 * nu2 if (odd_M and k == M - 2) else 2 * c1 * c2
        m.a(k, k + 2, amp * (e if _odd(k) else 1 / e))
    for k in range(1, M):
        if k == 1:
            v = c2 * (V1 + 1) * e
        elif k == M - 1:
            v = 2 * c1 * mu2 if odd_M else c2 * (V1 + 1) * e
        else:
            v = 2 * V1 * c2 * e if _odd(k) else 2 * c1 * mu2**2
        m.b(k, k + 1, v)
    for k in range(1, M - 2, 2):
        m.b(k, k + 3, 2 * c1 * nu2**2 * e**2)
    return m.state()


def _su11_sub(M: int, p: InterferometerParams) -> GaussianState:
    V1, V2, c1, c2 = p.V1, p.V2, p.c1, p.c2
    mu2, nu2 = p.mu2, p.nu2
    e = np.exp(1j * p.theta)
    m = _Blocks(M)
    for k in range(1, M + 1):
        m.diag(k, V1 * V2)
    if M == 2:
        m.b(1, 2, 2 * V1 * c2 * e)
        return m.state()
    if M == 3:
        m.a(1, 3, 2 * c1 * c2 * e)
        m.b(1, 2, 2 * V1 * c2 * e)
        m.b(2, 3, 2 * c1 * mu2**2)
        return m.state()
    for k in range(1, M - 1):
        m.a(k, k + 2, 2 * c1 * c2 * (e if _odd(k) else 1 / e))
    for k in range(1, M):
        m.b(k, k + 1, 2 * V1 * c2 * e if _odd(k) else 2 * c1 * mu2**2)
    for k in range(1, M - 2, 2):
        m.b(k, k + 3, 2 * c1 * nu2**2 * e**2)
    return m.state()


def _bs(M: int, p: InterferometerParams) -> GaussianState:
    V1, c1, mu1, nu1 = p.V1, p.c1, p.mu1, p.nu1
    f = np.exp(1j * p.phi)
    plus = mu1**2 / 2 + nu1**2 / 2 + 0.5
    minus = mu1**2 / 2 + nu1**2 / 2 - 0.5
    r2c1 = np.sqrt(2) * c1
    m = _Blocks(M)
    if M == 2:
        m.diag(1, 1)
        m.diag(2, 1)
        return m.state()
    if M == 3:
        m.diag(1, plus)
        m.diag(2, plus)
        m.diag(3, V1)
        m.a(1, 2, -minus)
        m.b(1, 3, -r2c1)
        m.b(2, 3, r2c1)
        return m.state()
    if M == 4:
        for k in range(1, 5):
            m.diag(k, plus)
        m.a(1, 2, -minus)
        m.a(3, 4, minus)
        for i, j, s in ((1, 3, -1), (1, 4, -1), (2, 3, 1), (2, 4, 1)):
            m.b(i, j, s * c1 * f)
        return m.state()

    odd_M = _odd(M)
    edge = {1, 2} if odd_M else {1, 2, M - 1, M}
    for k in range(1, M + 1):
        m.diag(k, plus if k in edge else V1)
    m.a(1, 2, -minus)
    if not odd_M:
        m.a(M - 1, M, minus)
    for k in range(1, M):
        if odd_M and k == M - 1:
            m.b(k, k + 1, r2c1)
        elif not _odd(k):
            m.b(k, k + 1, c1 * f)
    for k in range(1, M - 1):
        if odd_M and k == M - 2:
            m.b(k, k + 2, -r2c1)
        else:
            m.b(k, k + 2, (-1) ** k * c1 * f)
    for k in range(1, M - 2, 2):
        m.b(k, k + 3, -c1 * f)
    return m.state()


def _bs_sub(M: int, p: InterferometerParams) -> GaussianState:
    c1 = p.c1
    f = np.exp(1j * p.phi)
    m = _Blocks(M)
    for k in range(1, M + 1):
        m.diag(k, p.V1)
    if M == 2:
        return m.state()
    if M == 3:
        m.b(1, 3, -c1 * f)
        m.b(2, 3, c1 * f)
        return m.state()
    for k in range(2, M, 2):
        m.b(k, k + 1, c1 * f)
    for k in range(1, M - 1):
        m.b(k, k + 2, (-1) ** k * c1 * f)
    for k in range(1, M - 2, 2):
        m.b(k, k + 3, -c1 * f)
    return m.state()


_ANALYTIC = {
    Family.SU11: _su11,
    Family.SU11_SUB: _su11_sub,
    Family.BS: _bs,
    Family.BS_SUB: _bs_sub,
}


def analytic_state(family: Family | str, M: int, params: InterferometerParams) -> GaussianState:
    if M < 2:
        raise InvalidDimensionError(f"closed forms need M >= 2, got {M}")
    return _ANALYTIC[Family(family)](M, params)


def crosscheck(family: Family | str, M: int, params: InterferometerParams) -> float:
    """Max elementwise deviation between the closed form and the schedule builder."""
    return analytic_state(family, M, params).max_deviation(build(family, M, params))
