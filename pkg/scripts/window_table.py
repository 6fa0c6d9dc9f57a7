"""Classify all 301 bipartitions of the 6-mode window state and diff against the reference table."""

import argparse
import time

import numpy as np

from su11sim.entanglement import enumerate_bipartitions, scan_lmu
from su11sim.golden import golden_verdicts
from su11sim.interferometer import Family, state_builder


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--theta", type=float, default=0.0)
    ap.add_argument("--steps", type=int, default=20)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    grid = np.round(np.linspace(0.1, 2.0, args.steps), 12)
    t0 = time.perf_counter()
    res = scan_lmu(state_builder(Family.SU11_SUB, 6, args.theta), enumerate_bipartitions(6),
                   grid, grid, workers=args.workers)
    gold = golden_verdicts()
    verdicts = res.verdicts()
    counts = {}
    mismatches = []
    for v in verdicts:
        counts[v.verdict.value] = counts.get(v.verdict.value, 0) + 1
        if v.verdict is not gold[v.bipartition.id]:
            mismatches.append(v)
    print(f"scanned {len(verdicts)} bipartitions on {grid.size}x{grid.size} in {time.perf_counter() - t0:.1f}s")
    print("verdict counts:", ", ".join(f"{k}={n}" for k, n in sorted(counts.items())))
    print(f"{len(verdicts) - len(mismatches)}/{len(verdicts)} match the reference table")
    for v in mismatches:
        print(f"  {v.bipartition.id:24s} got {v.verdict.value:8s} want {gold[v.bipartition.id].value:8s}"
              f" L_mu in [{v.min_lmu:.3f}, {v.max_lmu:.3f}]")


if __name__ == "__main__":
    main()
