"""Self-consistency suites behind ``su11sim verify``."""

from __future__ import annotations

import numpy as np

from . import analytic
from .fock import fock_family
from .interferometer import Family, InterferometerParams, build, build_rho, build_rho_s, partial_trace
from .photon import (
    alternating_weights,
    analytic_photon_stats,
    paired_alternating_weights,
    photon_covariance,
)


def _draws(rng, n, r_max=2.0):
    for _ in range(n):
        r1, r2 = rng.uniform(0, r_max, 2)
        theta, phi = rng.uniform(0, 2 * np.pi, 2)
        yield InterferometerParams(max(r1, 1e-6), max(r2, 1e-6), theta, phi)


def _suite(name, deviation, tol, **extra):
    return {"name": name, "passed": bool(deviation < tol), "max_deviation": float(deviation), "tolerance": tol, **extra}


def crosscheck_suite(rng, draws):
    worst = 0.0
    for family in Family:
        for M in range(2, 13):
            for p in _draws(rng, draws):
                worst = max(worst, analytic.crosscheck(family, M, p))
    return _suite("analytic_crosscheck", worst, 1e-12)


def photon_closed_form_suite(rng, draws):
    worst = 0.0
    for family in Family:
        for M in range(2, 13):
            for p in _draws(rng, draws):
                a = analytic_photon_stats(family, M, p)
                b = photon_covariance(build(family, M, p))
                scale = max(1.0, float(np.max(np.abs(b.K))))
                worst = max(worst, float(np.max(np.abs(a.K - b.K))) / scale,
                            float(np.max(np.abs(a.mean_vector - b.mean_vector))) / scale)
    return _suite("photon_closed_form", worst, 1e-12)


def photon_identity_suite(rng, draws):
    worst = 0.0
    for p in _draws(rng, draws):
        for M in range(2, 13):
            worst = max(worst, photon_covariance(build_rho(M, p)).lc_variance(alternating_weights(M)))
            if M % 2 == 0:
                # the boundary-leakage value 2 mu1^2 nu1^2 holds for even windows only
                target = 2 * p.mu1**2 * p.nu1**2
                got = photon_covariance(build_rho_s(M, p)).lc_variance(alternating_weights(M))
                worst = max(worst, abs(got - target) / target)
        for m in range(2, 7):
            stats = photon_covariance(build(Family.BS, 2 * m, p))
            worst = max(worst, stats.lc_variance(paired_alternating_weights(2 * m)))
    return _suite("photon_identities", worst, 1e-10)


def subsystem_suite(rng, draws):
    worst = 0.0
    for p in _draws(rng, draws):
        for M in range(2, 11):
            full = partial_trace(build_rho(M + 4, p), list(range(3, M + 3)))
            worst = max(worst, full.max_deviation(build_rho_s(M, p)))
    return _suite("subsystem_identity", worst, 1e-12)


def band_suite():
    p = InterferometerParams(1.3, 0.9, 0.4, 0.7)
    worst = 0.0
    for family in (Family.SU11, Family.SU11_SUB):
        s = build(family, 12, p)
        j, k = np.indices(s.block_A.shape)
        far = np.abs(j - k) > 3
        worst = max(worst, float(np.max(np.abs(s.block_A[far]))), float(np.max(np.abs(s.block_B[far]))))
    return _suite("band_structure", worst, 1e-12)


def fock_suite(rng, quick):
    worst, deficits = 0.0, {}
    modes = (2, 3) if quick else (2, 3, 4)
    for family in Family:
        for M in modes:
            p = next(_draws(rng, 1, r_max=0.3))
            res = fock_family(family, M, p, cutoff=12)
            g = build(family, M, p)
            stats = photon_covariance(g)
            worst = max(worst, res.cm.max_deviation(g), float(np.max(np.abs(res.photons.K - stats.K))),
                        float(np.max(np.abs(res.photons.mean_vector - stats.mean_vector))))
            deficits[f"{family.value}:{M}"] = res.deficit
    return _suite("fock_oracle", worst, 1e-6, truncation_deficits=deficits)


def run_all(seed: int = 0, quick: bool = False) -> dict:
    rng = np.random.default_rng(seed)
    draws = 2 if quick else 10
    suites = [
        crosscheck_suite(rng, draws),
        photon_closed_form_suite(rng, draws),
        photon_identity_suite(rng, draws),
        subsystem_suite(rng, draws),
        band_suite(),
        fock_suite(rng, quick),
    ]
    return {"seed": seed, "passed": all(s["passed"] for s in suites), "suites": suites}
