"""Structured probe reports with a canonical plain-text rendering.

Reports are the artifact's evidence format: a claim, the parameters that
produced the evidence, optional table and witness blocks, and a PASS/FAIL
verdict. Rendering is deterministic — identical inputs (including seeds)
give byte-identical text — so golden-file tests and human diffs both work.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Tuple

PASS = "PASS"
FAIL = "FAIL"

_DIGITS_ENV = "PI1LAB_DIGITS"


def report_digits(default: int = 40) -> int:
    """Decimal places used in report renderings; override with PI1LAB_DIGITS."""
    raw = os.environ.get(_DIGITS_ENV)
    if raw is None:
        return default
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_DIGITS_ENV} must be an integer, got {raw!r}") from exc
    if val < 1:
        raise ValueError(f"{_DIGITS_ENV} must be positive, got {val}")
    return val


KV = Tuple[str, str]


@dataclass(frozen=True)
class ProbeReport:
    probe: str
    claim: str
    verdict: str
    parameters: Tuple[KV, ...] = ()
    table_header: Tuple[str, ...] = ()
    table_rows: Tuple[Tuple[str, ...], ...] = ()
    witnesses: Tuple[Tuple[KV, ...], ...] = ()
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL):
            raise ValueError(f"verdict must be PASS or FAIL, got {self.verdict!r}")
        if self.verdict == FAIL and not self.witnesses:
            raise ValueError("a FAIL report must carry at least one counter-witness")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def render(self) -> str:
        lines = [f"== probe: {self.probe} =="]
        lines.append(f"claim: {self.claim}")
        for key, value in self.parameters:
            lines.append(f"param: {key} = {value}")
        if self.table_header:
            lines.append("table: " + " | ".join(self.table_header))
            for row in self.table_rows:
                lines.append("  " + " | ".join(row))
        for i, witness in enumerate(self.witnesses):
            lines.append(f"witness[{i}]:")
            for key, value in witness:
                lines.append(f"  {key}: {value}")
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.render()
