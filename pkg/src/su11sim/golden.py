"""Reference negativity verdicts for the six-mode central subsystem state.

Entries list bipartitions whose parties do not cover all six modes, as
``(A, B, verdict)`` with ``min(A) < min(B)``.  Every bipartition covering all
six modes is entangled for all non-zero gains, so it is reported as "always".
"""

from __future__ import annotations

from .entanglement import Bipartition, Verdict, enumerate_bipartitions

_TABLE = (
    ("1", "2", "partial"),
    ("1", "3", "none"),
    ("1", "4", "none"),
    ("1", "5", "none"),
    ("1", "6", "none"),
    ("2", "3", "partial"),
    ("2", "4", "none"),
    ("2", "5", "none"),
    ("2", "6", "none"),
    ("3", "4", "partial"),
    ("3", "5", "none"),
    ("3", "6", "none"),
    ("4", "5", "partial"),
    ("4", "6", "none"),
    ("5", "6", "partial"),
    ("1", "2,3", "partial"),
    ("1", "2,4", "partial"),
    ("1", "2,5", "partial"),
    ("1", "2,6", "partial"),
    ("1", "3,4", "none"),
    ("1", "3,5", "none"),
    ("1", "3,6", "none"),
    ("1", "4,5", "none"),
    ("1", "4,6", "none"),
    ("1", "5,6", "none"),
    ("1,3", "2", "partial"),
    ("1,4", "2", "partial"),
    ("1,5", "2", "partial"),
    ("1,6", "2", "partial"),
    ("2", "3,4", "partial"),
    ("2", "3,5", "partial"),
    ("2", "3,6", "partial"),
    ("2", "4,5", "none"),
    ("2", "4,6", "none"),
    ("2", "5,6", "none"),
    ("1,2", "3", "partial"),
    ("1,4", "3", "partial"),
    ("1,5", "3", "none"),
    ("1,6", "3", "none"),
    ("2,4", "3", "partial"),
    ("2,5", "3", "partial"),
    ("2,6", "3", "partial"),
    ("3", "4,5", "partial"),
    ("3", "4,6", "partial"),
    ("3", "5,6", "none"),
    ("1,2", "4", "none"),
    ("1,3", "4", "partial"),
    ("1,5", "4", "partial"),
    ("1,6", "4", "none"),
    ("2,3", "4", "partial"),
    ("2,5", "4", "partial"),
    ("2,6", "4", "none"),
    ("3,5", "4", "partial"),
    ("3,6", "4", "partial"),
    ("4", "5,6", "partial"),
    ("1,2", "5", "none"),
    ("1,3", "5", "none"),
    ("1,4", "5", "partial"),
    ("1,6", "5", "partial"),
    ("2,3", "5", "none"),
    ("2,4", "5", "partial"),
    ("2,6", "5", "partial"),
    ("3,4", "5", "partial"),
    ("3,6", "5", "partial"),
    ("4,6", "5", "partial"),
    ("1,2", "6", "none"),
    ("1,3", "6", "none"),
    ("1,4", "6", "none"),
    ("1,5", "6", "partial"),
    ("2,3", "6", "none"),
    ("2,4", "6", "none"),
    ("2,5", "6", "partial"),
    ("3,4", "6", "none"),
    ("3,5", "6", "partial"),
    ("4,5", "6", "partial"),
    ("1", "2,3,4", "always"),
    ("1", "2,3,5", "partial"),
    ("1", "2,3,6", "partial"),
    ("1", "2,4,5", "partial"),
    ("1", "2,4,6", "partial"),
    ("1", "2,5,6", "partial"),
    ("1", "3,4,5", "none"),
    ("1", "3,4,6", "none"),
    ("1", "3,5,6", "none"),
    ("1", "4,5,6", "none"),
    ("1,3,4", "2", "always"),
    ("1,3,5", "2", "partial"),
    ("1,3,6", "2", "partial"),
    ("1,4,5", "2", "partial"),
    ("1,4,6", "2", "partial"),
    ("1,5,6", "2", "partial"),
    ("2", "3,4,5", "partial"),
    ("2", "3,4,6", "partial"),
    ("2", "3,5,6", "partial"),
    ("2", "4,5,6", "none"),
    ("1,2,4", "3", "always"),
    ("1,2,5", "3", "partial"),
    ("1,2,6", "3", "partial"),
    ("1,4,5", "3", "partial"),
    ("1,4,6", "3", "partial"),
    ("1,5,6", "3", "none"),
    ("2,4,5", "3", "partial"),
    ("2,4,6", "3", "partial"),
    ("2,5,6", "3", "partial"),
    ("3", "4,5,6", "always"),
    ("1,2,3", "4", "always"),
    ("1,2,5", "4", "partial"),
    ("1,2,6", "4", "none"),
    ("1,3,5", "4", "partial"),
    ("1,3,6", "4", "partial"),
    ("1,5,6", "4", "partial"),
    ("2,3,5", "4", "partial"),
    ("2,3,6", "4", "partial"),
    ("2,5,6", "4", "partial"),
    ("3,5,6", "4", "always"),
    ("1,2,3", "5", "none"),
    ("1,2,4", "5", "partial"),
    ("1,2,6", "5", "partial"),
    ("1,3,4", "5", "partial"),
    ("1,3,6", "5", "partial"),
    ("1,4,6", "5", "partial"),
    ("2,3,4", "5", "partial"),
    ("2,3,6", "5", "partial"),
    ("2,4,6", "5", "partial"),
    ("3,4,6", "5", "always"),
    ("1,2,3", "6", "none"),
    ("1,2,4", "6", "none"),
    ("1,2,5", "6", "partial"),
    ("1,3,4", "6", "none"),
    ("1,3,5", "6", "partial"),
    ("1,4,5", "6", "partial"),
    ("2,3,4", "6", "none"),
    ("2,3,5", "6", "partial"),
    ("2,4,5", "6", "partial"),
    ("3,4,5", "6", "always"),
    ("1", "2,3,4,5", "always"),
    ("1", "2,3,4,6", "always"),
    ("1", "2,3,5,6", "always"),
    ("1", "2,4,5,6", "always"),
    ("1", "3,4,5,6", "none"),
    ("1,3,4,5", "2", "always"),
    ("1,3,4,6", "2", "always"),
    ("1,3,5,6", "2", "always"),
    ("1,4,5,6", "2", "always"),
    ("2", "3,4,5,6", "partial"),
    ("1,2,4,5", "3", "always"),
    ("1,2,4,6", "3", "always"),
    ("1,2,5,6", "3", "always"),
    ("1,4,5,6", "3", "always"),
    ("2,4,5,6", "3", "always"),
    ("1,2,3,5", "4", "always"),
    ("1,2,3,6", "4", "always"),
    ("1,2,5,6", "4", "always"),
    ("1,3,5,6", "4", "always"),
    ("2,3,5,6", "4", "always"),
    ("1,2,3,4", "5", "partial"),
    ("1,2,3,6", "5", "always"),
    ("1,2,4,6", "5", "always"),
    ("1,3,4,6", "5", "always"),
    ("2,3,4,6", "5", "always"),
    ("1,2,3,4", "6", "none"),
    ("1,2,3,5", "6", "always"),
    ("1,2,4,5", "6", "always"),
    ("1,3,4,5", "6", "always"),
    ("2,3,4,5", "6", "always"),
    ("1,2", "3,4", "always"),
    ("1,2", "3,5", "partial"),
    ("1,2", "3,6", "partial"),
    ("1,2", "4,5", "none"),
    ("1,2", "4,6", "none"),
    ("1,2", "5,6", "none"),
    ("1,3", "2,4", "always"),
    ("1,3", "2,5", "partial"),
    ("1,3", "2,6", "partial"),
    ("1,3", "4,5", "partial"),
    ("1,3", "4,6", "partial"),
    ("1,3", "5,6", "none"),
    ("1,4", "2,3", "always"),
    ("1,4", "2,5", "partial"),
    ("1,4", "2,6", "partial"),
    ("1,4", "3,5", "partial"),
    ("1,4", "3,6", "partial"),
    ("1,4", "5,6", "partial"),
    ("1,5", "2,3", "partial"),
    ("1,5", "2,4", "partial"),
    ("1,5", "2,6", "partial"),
    ("1,5", "3,4", "partial"),
    ("1,5", "3,6", "partial"),
    ("1,5", "4,6", "partial"),
    ("1,6", "2,3", "partial"),
    ("1,6", "2,4", "none"),
    ("1,6", "2,5", "partial"),
    ("1,6", "3,4", "none"),
    ("1,6", "3,5", "partial"),
    ("1,6", "4,5", "partial"),
    ("2,3", "4,5", "partial"),
    ("2,3", "4,6", "partial"),
    ("2,3", "5,6", "none"),
    ("2,4", "3,5", "partial"),
    ("2,4", "3,6", "partial"),
    ("2,4", "5,6", "partial"),
    ("2,5", "3,4", "partial"),
    ("2,5", "3,6", "partial"),
    ("2,5", "4,6", "partial"),
    ("2,6", "3,4", "partial"),
    ("2,6", "3,5", "partial"),
    ("2,6", "4,5", "partial"),
    ("3,4", "5,6", "always"),
    ("3,5", "4,6", "always"),
    ("3,6", "4,5", "always"),
    ("1,2", "3,4,5", "always"),
    ("1,2", "3,4,6", "always"),
    ("1,2", "3,5,6", "always"),
    ("1,2", "4,5,6", "always"),
    ("1,3", "2,4,5", "always"),
    ("1,3", "2,4,6", "always"),
    ("1,3", "2,5,6", "always"),
    ("1,3", "4,5,6", "always"),
    ("1,4", "2,3,5", "always"),
    ("1,4", "2,3,6", "always"),
    ("1,4", "2,5,6", "always"),
    ("1,4", "3,5,6", "always"),
    ("1,5", "2,3,4", "always"),
    ("1,5", "2,3,6", "always"),
    ("1,5", "2,4,6", "always"),
    ("1,5", "3,4,6", "always"),
    ("1,6", "2,3,4", "always"),
    ("1,6", "2,3,5", "always"),
    ("1,6", "2,4,5", "always"),
    ("1,6", "3,4,5", "always"),
    ("1,4,5", "2,3", "always"),
    ("1,4,6", "2,3", "always"),
    ("1,5,6", "2,3", "always"),
    ("2,3", "4,5,6", "always"),
    ("1,3,5", "2,4", "always"),
    ("1,3,6", "2,4", "always"),
    ("1,5,6", "2,4", "always"),
    ("2,4", "3,5,6", "always"),
    ("1,3,4", "2,5", "always"),
    ("1,3,6", "2,5", "always"),
    ("1,4,6", "2,5", "always"),
    ("2,5", "3,4,6", "always"),
    ("1,3,4", "2,6", "always"),
    ("1,3,5", "2,6", "always"),
    ("1,4,5", "2,6", "always"),
    ("2,6", "3,4,5", "always"),
    ("1,2,5", "3,4", "always"),
    ("1,2,6", "3,4", "always"),
    ("1,5,6", "3,4", "always"),
    ("2,5,6", "3,4", "always"),
    ("1,2,4", "3,5", "always"),
    ("1,2,6", "3,5", "always"),
    ("1,4,6", "3,5", "always"),
    ("2,4,6", "3,5", "always"),
    ("1,2,4", "3,6", "always"),
    ("1,2,5", "3,6", "always"),
    ("1,4,5", "3,6", "always"),
    ("2,4,5", "3,6", "always"),
    ("1,2,3", "4,5", "always"),
    ("1,2,6", "4,5", "always"),
    ("1,3,6", "4,5", "always"),
    ("2,3,6", "4,5", "always"),
    ("1,2,3", "4,6", "always"),
    ("1,2,5", "4,6", "always"),
    ("1,3,5", "4,6", "always"),
    ("2,3,5", "4,6", "always"),
    ("1,2,3", "5,6", "always"),
    ("1,2,4", "5,6", "always"),
    ("1,3,4", "5,6", "always"),
    ("2,3,4", "5,6", "always"),
)


def _parse(text: str) -> tuple:
    return tuple(int(x) for x in text.split(","))


def golden_verdicts() -> dict:
    """Map bipartition id to the reference verdict for all 301 bipartitions of six modes."""
    out = {b.id: Verdict.ALWAYS for b in enumerate_bipartitions(6, require_cover=True)}
    for a, b, verdict in _TABLE:
        out[Bipartition(6, _parse(a), _parse(b)).id] = Verdict(verdict)
    return out
