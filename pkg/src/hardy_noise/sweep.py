"""Grid sweeps of the white-noise thresholds over ``p1`` at fixed ``p2``.

Each row gives two values of ``1 - p`` (tolerated noise) as functions of
``p1``: the upper curve from the exact white-noise probabilities and the
lower curve from the trace-distance criterion.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import ConsistencyError, InvalidInput
from .thresholds import tracedist_one_minus_p, white_highdim_one_minus_p

CSV_HEADER = ("p1", "upper_one_minus_p", "lower_one_minus_p")
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SweepRequest:
    d1: int
    d2: int
    p2: float
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.d1 < 2 or self.d2 < 2:
            raise InvalidInput(f"dimensions must be >= 2, got {self.d1}x{self.d2}")
        if not (math.isfinite(self.p2) and 0 < self.p2 <= 1):
            raise InvalidInput(f"p2 must lie in (0, 1], got {self.p2}")
        if self.steps < 1:
            raise InvalidInput("empty grid: steps must be >= 1")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise InvalidInput("grid bounds must be finite")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepRow:
    p1: float
    upper_one_minus_p: float
    lower_one_minus_p: float


@dataclass(frozen=True)
class SweepResult:
    request: SweepRequest
    rows: tuple[SweepRow, ...]
    skipped: tuple[tuple[float, str], ...]


def parse_grid(text: str) -> tuple[float, float, int]:
    """Parse ``start:stop:steps``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise InvalidInput(f"grid must be start:stop:steps, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise InvalidInput(f"bad grid {text!r}: {exc}") from None


def _point(p1: float, p2: float, d: int) -> SweepRow:
    upper = white_highdim_one_minus_p(p1, p2, d)
    lower = tracedist_one_minus_p(p1, p2, d)
    return SweepRow(p1, upper, lower)


def run_sweep(req: SweepRequest) -> SweepResult:
    d = req.d1 * req.d2
    rows, skipped = [], []
    for p1 in req.grid():
        p1 = float(p1)
        if p1 <= 0:
            skipped.append((p1, "p1 <= 0"))
            continue
        if p1 * p1 + req.p2 * req.p2 > 1.0 + 1e-12:
            skipped.append((p1, "p1^2 + p2^2 > 1"))
            continue
        row = _point(p1, req.p2, d)
        if row.upper_one_minus_p < row.lower_one_minus_p:
            raise ConsistencyError(f"upper curve below lower curve at p1={p1!r}")
        rows.append(row)
    return SweepResult(req, tuple(rows), tuple(skipped))


def _fmt(x: float, digits: int | None) -> str:
    return format(x, ".17g") if digits is None else f"{x:.{digits}f}"


def to_csv(result: SweepResult, digits: int | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in result.rows:
        writer.writerow([_fmt(r.p1, digits), _fmt(r.upper_one_minus_p, digits), _fmt(r.lower_one_minus_p, digits)])
    for p1, reason in result.skipped:
        buf.write(f"# skipped,{_fmt(p1, digits)},{reason}\n")
    return buf.getvalue()


def to_json_obj(result: SweepResult, digits: int | None = None) -> dict:
    def num(x):
        return x if digits is None else round(x, digits)

    return {
        "schema": SCHEMA_VERSION,
        "request": asdict(result.request),
        "rows": [{k: num(v) for k, v in asdict(r).items()} for r in result.rows],
        "skipped": [{"p1": num(p1), "reason": reason} for p1, reason in result.skipped],
    }


def to_json(result: SweepResult, digits: int | None = None) -> str:
    return json.dumps(to_json_obj(result, digits), indent=2) + "\n"
