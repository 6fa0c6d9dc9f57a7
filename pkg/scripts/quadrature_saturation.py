"""Variance of the low-noise quadrature combinations versus gain.

Window SU(1,1) states use r1 = r2 = r and theta = 0; the splitter window uses phi = 0.
"""

import argparse

import numpy as np

from su11sim.entanglement import min_quad_variance, p_weights, quad_lc_variance, x_weights
from su11sim.interferometer import InterferometerParams, build_rho_bs_s, build_rho_s


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--modes", type=int, default=4)
    ap.add_argument("--rmax", type=float, default=4.0)
    ap.add_argument("--points", type=int, default=9)
    args = ap.parse_args()

    M = args.modes
    wx = x_weights([(-1) ** k for k in range(M)])
    wp = p_weights([1] * M)
    print(f"{'r':>5} {'alt X':>12} {'sum P':>12} {'min (M x)':>12} {'bs X':>12} {'bs P':>12}")
    for r in np.linspace(0.5, args.rmax, args.points):
        s = build_rho_s(M, InterferometerParams(r, r, 0.0, 0.0))
        bs = build_rho_bs_s(4, InterferometerParams(r, 0.0, 0.0, 0.0))
        lowest, _ = min_quad_variance(s)
        print(f"{r:5.2f} {quad_lc_variance(s, wx):12.6f} {quad_lc_variance(s, wp):12.6f} {M * lowest:12.6f}"
              f" {quad_lc_variance(bs, x_weights([1, -1, 1, 1])):12.3e}"
              f" {quad_lc_variance(bs, p_weights([1, -1, -1, -1])):12.3e}")


if __name__ == "__main__":
    main()
