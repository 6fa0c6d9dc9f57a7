"""Command-line front end: build states, photon statistics, PPT scans, self-verification.

Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .entanglement import (
    Bipartition,
    enumerate_bipartitions,
    scan_lmu,
)
from .gaussian import GaussianError, GaussianState
from .interferometer import BALANCED, Family, InterferometerParams, build, build_balanced_su11, state_builder
from .photon import (
    alternating_weights,
    paired_alternating_weights,
    photon_covariance,
)

log = logging.getLogger("su11sim")

EXIT_OK, EXIT_VALIDATION, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3
FAMILY_CHOICES = [f.value for f in Family] + [BALANCED]


class ConfigError(ValueError):
    pass


# serialization ----------------------------------------------------------------


def _matrix_to_json(m: np.ndarray) -> list:
    return [[{"re": float(z.real), "im": float(z.imag)} for z in row] for row in m]


def _matrix_from_json(rows: list) -> np.ndarray:
    return np.array([[complex(z["re"], z["im"]) for z in row] for row in rows], dtype=complex)


def state_to_json(state: GaussianState) -> dict:
    return {"m": state.mode_count, "A": _matrix_to_json(state.block_A), "B": _matrix_to_json(state.block_B)}


def state_from_json(doc: dict) -> GaussianState:
    try:
        A, B = _matrix_from_json(doc["A"]), _matrix_from_json(doc["B"])
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"state JSON is missing or malformed: {exc}") from exc
    if A.shape != (doc["m"], doc["m"]):
        raise ConfigError(f"state JSON declares m={doc['m']} but A has shape {A.shape}")
    return GaussianState(A, B)


# scan configuration -------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    r1_min: float = 0.1
    r1_max: float = 2.0
    r1_steps: int = 20
    r2_min: float = 0.1
    r2_max: float = 2.0
    r2_steps: int = 20

    def __post_init__(self):
        for axis in ("r1", "r2"):
            lo, hi, n = (getattr(self, f"{axis}_{k}") for k in ("min", "max", "steps"))
            if int(n) != n or n < 1:
                raise ConfigError(f"grid.{axis}_steps must be a positive integer, got {n}")
            if lo > hi:
                raise ConfigError(f"grid.{axis}_min ({lo}) exceeds grid.{axis}_max ({hi})")
            if lo < 0:
                raise ConfigError(f"grid.{axis}_min must be >= 0, got {lo}")
            if n == 1 and lo != hi:
                raise ConfigError(f"grid.{axis}_steps = 1 needs {axis}_min == {axis}_max")

    def axes(self):
        return (
            np.round(np.linspace(self.r1_min, self.r1_max, int(self.r1_steps)), 12),
            np.round(np.linspace(self.r2_min, self.r2_max, int(self.r2_steps)), 12),
        )

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """``"lo:hi:n"`` for both axes, or ``"lo:hi:n,lo:hi:n"`` for r1 and r2 separately."""
        parts = text.split(",")
        if len(parts) not in (1, 2):
            raise ConfigError(f"--grid expects 'lo:hi:n[,lo:hi:n]', got {text!r}")
        axes = []
        for part in parts:
            bits = part.split(":")
            if len(bits) != 3:
                raise ConfigError(f"--grid axis {part!r} is not 'lo:hi:n'")
            try:
                axes.append((float(bits[0]), float(bits[1]), int(bits[2])))
            except ValueError as exc:
                raise ConfigError(f"--grid axis {part!r}: {exc}") from exc
        if len(axes) == 1:
            axes *= 2
        (a, b, n), (c, d, k) = axes
        return cls(a, b, n, c, d, k)


@dataclass(frozen=True)
class ScanConfig:
    family: str = Family.SU11_SUB.value
    modes: int = 6
    theta: float = 0.0
    phi: float = 0.0
    grid: GridSpec = field(default_factory=GridSpec)
    bipartitions: str = "all"
    out: str = "scan.csv"
    format: str = "csv"
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        fam = self.family.upper()
        if fam not in FAMILY_CHOICES:
            raise ConfigError(f"family: unknown family {self.family!r}; choose from {FAMILY_CHOICES}")
        object.__setattr__(self, "family", fam)
        if fam == BALANCED:
            object.__setattr__(self, "modes", 2)
        elif int(self.modes) != self.modes or self.modes < 2:
            raise ConfigError(f"modes: need an integer >= 2, got {self.modes}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format: expected 'csv' or 'json', got {self.format!r}")
        if self.workers < 1:
            raise ConfigError(f"workers: need >= 1, got {self.workers}")

    def bipartition_list(self) -> List[Bipartition]:
        spec = self.bipartitions.strip()
        if spec == "all":
            return enumerate_bipartitions(self.modes)
        if spec == "cover-all":
            return enumerate_bipartitions(self.modes, require_cover=True)
        try:
            return [Bipartition.parse(item, self.modes) for item in spec.split(";") if item.strip()]
        except GaussianError as exc:
            raise ConfigError(f"bipartitions: {exc}") from exc


_SCAN_FIELDS = {f.name for f in dataclasses.fields(ScanConfig)}
_GRID_FIELDS = {f.name for f in dataclasses.fields(GridSpec)}


def load_scan_config(path: Path, overrides: Optional[dict] = None) -> ScanConfig:
    """Read a JSON scan config, reporting the offending line or field on error."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: top level must be an object")
    unknown = sorted(set(doc) - _SCAN_FIELDS)
    if unknown:
        raise ConfigError(f"{path}:{_line_of(text, unknown[0])}: unknown field {unknown[0]!r}")
    grid = doc.pop("grid", {})
    if isinstance(grid, str):
        grid = GridSpec.parse(grid)
    elif isinstance(grid, dict):
        bad = sorted(set(grid) - _GRID_FIELDS)
        if bad:
            raise ConfigError(f"{path}:{_line_of(text, bad[0])}: unknown field 'grid.{bad[0]}'")
        try:
            grid = GridSpec(**grid)
        except ConfigError as exc:
            raise ConfigError(f"{path}:{_line_of(text, 'grid')}: {exc}") from exc
    else:
        raise ConfigError(f"{path}:{_line_of(text, 'grid')}: field 'grid' must be an object or 'lo:hi:n' string")
    _check_types(path, text, doc)
    doc.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return ScanConfig(grid=grid, **doc)
    except ConfigError as exc:
        key = str(exc).split(":", 1)[0]
        raise ConfigError(f"{path}:{_line_of(text, key)}: {exc}") from exc


def _line_of(text: str, key: str) -> int:
    """1-based line of the first ``"key"`` occurrence, or 0 if absent."""
    for n, line in enumerate(text.splitlines(), 1):
        if f'"{key}"' in line:
            return n
    return 0


_FIELD_TYPES = {"family": str, "modes": int, "theta": (int, float), "phi": (int, float),
                "bipartitions": str, "out": str, "format": str, "seed": int, "workers": int}


def _check_types(path, text: str, doc: dict) -> None:
    for key, kind in _FIELD_TYPES.items():
        if key in doc and (not isinstance(doc[key], kind) or isinstance(doc[key], bool)):
            raise ConfigError(
                f"{path}:{_line_of(text, key)}: field '{key}' has type {type(doc[key]).__name__}"
            )


# commands ---------------------------------------------------------------------------


def _params(args) -> InterferometerParams:
    return InterferometerParams(args.r1, args.r2, args.theta, args.phi)


def _state(args) -> GaussianState:
    family = args.family.upper()
    if family == BALANCED:
        return build_balanced_su11(_params(args))
    return build(Family(family), args.modes, _params(args))


def _write(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_build(args) -> int:
    _write(args.out, json.dumps(state_to_json(_state(args)), indent=1) + "\n")
    return EXIT_OK


def _weights(spec: Optional[str], M: int) -> Optional[np.ndarray]:
    if spec is None:
        return None
    if spec == "alternating":
        return alternating_weights(M)
    if spec == "paired":
        return paired_alternating_weights(M)
    try:
        return np.array([float(x) for x in spec.split(",")])
    except ValueError as exc:
        raise ConfigError(f"--weights: {exc}") from exc


def cmd_photon_stats(args) -> int:
    state = _state(args)
    stats = photon_covariance(state)
    w = _weights(args.weights, state.mode_count)
    if w is not None and w.size != state.mode_count:
        raise ConfigError(f"--weights has {w.size} entries, state has {state.mode_count} modes")
    if args.format == "csv":
        lines = ["i,j,K_ij"] + [
            f"{i + 1},{j + 1},{stats.K[i, j]!r}" for i in range(stats.mode_count) for j in range(stats.mode_count)
        ]
        _write(args.out, "\n".join(lines) + "\n")
    else:
        doc = {"m": stats.mean_vector.tolist(), "K": stats.K.tolist()}
        if w is not None:
            doc["lc_variance"] = stats.lc_variance(w)
        _write(args.out, json.dumps(doc, indent=1) + "\n")
    return EXIT_OK


def _verdict_path(out: str) -> Path:
    p = Path(out)
    return p.with_name(p.stem + ".verdicts.csv")


def run_scan(config: ScanConfig):
    r1, r2 = config.grid.axes()
    fn = state_builder(config.family, config.modes, config.theta, config.phi)
    return scan_lmu(fn, config.bipartition_list(), r1, r2, workers=config.workers)


def cmd_ppt_scan(args) -> int:
    overrides = {
        "family": args.family, "modes": args.modes, "theta": args.theta, "phi": args.phi,
        "bipartitions": args.bipartitions, "out": args.out, "format": args.format,
        "seed": args.seed, "workers": args.workers,
    }
    if args.config:
        config = load_scan_config(Path(args.config), overrides)
        if args.grid:
            config = dataclasses.replace(config, grid=GridSpec.parse(args.grid))
    else:
        grid = GridSpec.parse(args.grid) if args.grid else GridSpec()
        config = ScanConfig(grid=grid, **{k: v for k, v in overrides.items() if v is not None})
    result = run_scan(config)
    verdicts = result.verdicts()
    if config.format == "csv":
        with open(config.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["r1", "r2", "bipartition_id", "L_mu"])
            for r1, r2, bid, value in result.rows():
                writer.writerow([repr(r1), repr(r2), bid, repr(value)])
        with open(_verdict_path(config.out), "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["bipartition_id", "A", "B", "verdict"])
            for v in verdicts:
                b = v.bipartition
                writer.writerow([b.id, " ".join(map(str, b.set_A)), " ".join(map(str, b.set_B)), v.verdict.value])
    else:
        doc = {
            "rows": [dict(zip(("r1", "r2", "bipartition_id", "L_mu"), row)) for row in result.rows()],
            "verdicts": [
                {"bipartition_id": v.bipartition.id, "A": list(v.bipartition.set_A),
                 "B": list(v.bipartition.set_B), "verdict": v.verdict.value}
                for v in verdicts
            ],
        }
        Path(config.out).write_text(json.dumps(doc, indent=1) + "\n")
    log.info("wrote %d rows for %d bipartitions", result.lmu.size, len(verdicts))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    report = run_all(seed=args.seed, quick=args.quick)
    _write(args.out, json.dumps(report, indent=1) + "\n")
    failed = [s["name"] for s in report["suites"] if not s["passed"]]
    for name in failed:
        log.error("suite failed: %s", name)
    return EXIT_VERIFY if failed else EXIT_OK


# parser -------------------------------------------------------------------------


def _add_state_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", type=str.upper, choices=FAMILY_CHOICES, default=Family.SU11.value)
    p.add_argument("--modes", type=int, default=4)
    p.add_argument("--r1", type=float, default=0.5)
    p.add_argument("--r2", type=float, default=0.5)
    p.add_argument("--theta", type=float, default=0.0, help="radians")
    p.add_argument("--phi", type=float, default=0.0, help="radians")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="su11sim", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a state's A and B blocks as JSON")
    _add_state_args(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("photon-stats", help="mean photon numbers and photon covariance")
    _add_state_args(p)
    p.add_argument("--weights", help="comma list, 'alternating' or 'paired'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_photon_stats)

    p = sub.add_parser("ppt-scan", help="L_mu grid scan and negativity verdicts")
    p.add_argument("--config", help="JSON scan config; command-line flags override it")
    p.add_argument("--family", type=str.upper, choices=FAMILY_CHOICES)
    p.add_argument("--modes", type=int)
    p.add_argument("--theta", type=float)
    p.add_argument("--phi", type=float)
    p.add_argument("--grid", help="lo:hi:n[,lo:hi:n] (default 0.1:2.0:20)")
    p.add_argument("--bipartitions", help="'all', 'cover-all' or e.g. '1|2;1,3|2,4'")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_ppt_scan)

    p = sub.add_parser("verify", help="run the self-consistency suites")
    p.add_argument("--out", default="-")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="fewer random draws")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except OSError as exc:
        log.error("I/O error: %s", exc)
        return EXIT_IO
    except (GaussianError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
