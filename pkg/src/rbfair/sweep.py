"""Bandwidth sweeps and complexity tables, with CSV emit/parse helpers.

CSV conventions: comma delimiter, '.' decimal separator, mandatory header,
'\\n' line endings, floats printed at 17 significant digits so a parse of
the emitted file reproduces every numeric column bit-exactly.
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .discrete import (
    DEFAULT_TIE_TOL,
    boundary_candidates,
    filter_feasible,
    select_maximizers,
    system_log_utility,
)
from .oracle import complexity_count
from .solver import Scenario, solve_continuous


def fmt17(x: float) -> str:
    """17-significant-digit decimal form; parses back to the same double."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class SweepRow:
    bandwidth: float
    rates: tuple[float, ...]
    bids: tuple[float, ...]
    rbs: Optional[tuple[int, ...]]   # None when this bandwidth had no feasible rounding
    converged: bool
    wall_time_s: float
    error: Optional[str] = None


def run_sweep(
    scenario: Scenario,
    start: float,
    stop: float,
    step: float = 1.0,
    tie_tol: float = DEFAULT_TIE_TOL,
) -> list[SweepRow]:
    """Allocate at each bandwidth in [start, stop]; failures land in the row, not out of it."""
    m = len(scenario.ues)
    if not start >= m:
        raise ValueError(f"sweep start {start} is below the UE count {m}")
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    if stop < start:
        raise ValueError(f"stop {stop} is below start {start}")

    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    rows: list[SweepRow] = []
    for i in range(count):
        bandwidth = start + i * step
        t0 = time.perf_counter()
        cont = solve_continuous(replace(scenario, bandwidth=bandwidth))
        utilities = scenario.utilities
        feasible = filter_feasible(boundary_candidates(cont.rates), bandwidth)
        if feasible:
            scored = [
                replace(c, log_utility=system_log_utility(c, utilities)) for c in feasible
            ]
            best = select_maximizers(scored, utilities, tie_tol)[0]
            rbs, error = best.rbs, None
        else:
            smallest = min(c.total for c in boundary_candidates(cont.rates))
            rbs, error = None, f"exhausted bandwidth: smallest candidate total {smallest}"
        wall = time.perf_counter() - t0
        rows.append(
            SweepRow(
                bandwidth=bandwidth,
                rates=cont.rates,
                bids=cont.bids,
                rbs=rbs,
                converged=cont.converged,
                wall_time_s=wall,
                error=error,
            )
        )
    return rows


def sweep_header(ue_count: int) -> list[str]:
    cols = ["R"]
    cols += [f"rate_{i}" for i in range(1, ue_count + 1)]
    cols += [f"bid_{i}" for i in range(1, ue_count + 1)]
    cols += [f"rb_{i}" for i in range(1, ue_count + 1)]
    cols += ["converged", "wall_time_s", "error"]
    return cols


def sweep_to_csv(rows: Sequence[SweepRow], include_timing: bool = True) -> str:
    """Render sweep rows; include_timing=False zeroes the wall-time column so
    successive runs are byte-identical."""
    if not rows:
        raise ValueError("no rows to render")
    m = len(rows[0].rates)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(sweep_header(m))
    for row in rows:
        rbs = [str(q) for q in row.rbs] if row.rbs is not None else [""] * m
        wall = row.wall_time_s if include_timing else 0.0
        writer.writerow(
            [fmt17(row.bandwidth)]
            + [fmt17(x) for x in row.rates]
            + [fmt17(x) for x in row.bids]
            + rbs
            + ["true" if row.converged else "false", fmt17(wall), row.error or ""]
        )
    return buf.getvalue()


def parse_sweep_csv(text: str) -> list[SweepRow]:
    """Inverse of sweep_to_csv (modulo the include_timing zeroing)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    m = sum(1 for col in header if col.startswith("rate_"))
    rows = []
    for rec in reader:
        rbs_raw = rec[1 + 2 * m : 1 + 3 * m]
        rows.append(
            SweepRow(
                bandwidth=float(rec[0]),
                rates=tuple(float(x) for x in rec[1 : 1 + m]),
                bids=tuple(float(x) for x in rec[1 + m : 1 + 2 * m]),
                rbs=tuple(int(x) for x in rbs_raw) if rbs_raw[0] != "" else None,
                converged=rec[1 + 3 * m] == "true",
                wall_time_s=float(rec[2 + 3 * m]),
                error=rec[3 + 3 * m] or None,
            )
        )
    return rows


@dataclass(frozen=True)
class ComplexityRow:
    ues: int
    full: int        # exact count, exceeds 64-bit range for realistic inputs
    boundary: int
    log10_full: float
    log10_boundary: float


def report_complexity(ue_counts: Sequence[int], candidates_per_ue: int) -> list[ComplexityRow]:
    """Search-space sizes over a range of cell populations, semilog-plot ready."""
    if not ue_counts:
        raise ValueError("ue_counts is empty")
    rows = []
    for m in ue_counts:
        full, boundary = complexity_count(m, candidates_per_ue)
        rows.append(
            ComplexityRow(
                ues=m,
                full=full,
                boundary=boundary,
                log10_full=m * math.log10(candidates_per_ue),
                log10_boundary=m * math.log10(2.0),
            )
        )
    return rows


def complexity_to_csv(rows: Sequence[ComplexityRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ues", "full_evaluations", "boundary_evaluations", "log10_full", "log10_boundary"])
    for row in rows:
        writer.writerow(
            [row.ues, str(row.full), str(row.boundary), fmt17(row.log10_full), fmt17(row.log10_boundary)]
        )
    return buf.getvalue()
