"""L_mu of the balanced SU(1,1) pair over an (r1, r2) grid, written as CSV."""

import argparse

import numpy as np

from su11sim.entanglement import Bipartition, scan_lmu
from su11sim.interferometer import InterferometerParams, build_balanced_su11


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=50)
    ap.add_argument("--lo", type=float, default=0.05)
    ap.add_argument("--hi", type=float, default=2.0)
    ap.add_argument("--theta", type=float, default=0.0)
    ap.add_argument("--out", default="balanced_lmu.csv")
    args = ap.parse_args()

    grid = np.linspace(args.lo, args.hi, args.steps)
    res = scan_lmu(
        lambda r1, r2: build_balanced_su11(InterferometerParams(r1, r2, args.theta, 0.0)),
        [Bipartition(2, (1,), (2,))],
        grid,
    )
    L = res.lmu[:, :, 0]
    np.savetxt(args.out, np.column_stack([np.repeat(grid, grid.size), np.tile(grid, grid.size), L.ravel()]),
               delimiter=",", header="r1,r2,L_mu", comments="")
    print(f"grid {args.steps}x{args.steps}: L_mu in [{L.min():.4f}, {L.max():.4f}]")
    print(f"negative everywhere: {bool(np.all(L < 0))}")
    print(f"diagonal strictly decreasing: {bool(np.all(np.diff(np.diag(L)) < 0))}")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
