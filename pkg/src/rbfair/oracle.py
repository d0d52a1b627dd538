"""Exhaustive ground truth for small instances, plus search-space accounting.

The brute-force search enumerates the full integer grid {1..Q}^M with no
cleverness whatsoever, so it can be trusted as an independent check on the
boundary-mapping heuristic.  Guards keep it at desk scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .discrete import RBVector, system_log_utility
from .exceptions import ExhaustedBandwidthError
from .solver import Scenario
from .utility import UtilityFunction

MAX_UES = 4
MAX_GRID = 128


@dataclass(frozen=True)
class OracleResult:
    best: RBVector
    evaluated_count: int
    grid_bound: int


def brute_force_discrete(scenario: Scenario, grid_bound: int) -> OracleResult:
    """Best allocation over the full grid {1..grid_bound}^M, totals capped by bandwidth.

    Exact ties resolve to the lexicographically smallest vector.  Refuses
    instances beyond MAX_UES users or MAX_GRID blocks per user.
    """
    m = len(scenario.ues)
    if m > MAX_UES:
        raise ValueError(f"brute force refuses more than {MAX_UES} UEs, got {m}")
    if not 1 <= grid_bound <= MAX_GRID:
        raise ValueError(f"grid bound must be in [1, {MAX_GRID}], got {grid_bound}")

    utilities = scenario.utilities
    bandwidth = scenario.bandwidth
    # per-UE score tables; the hot loop is then lookups and a sum
    tables = [[u.log_evaluate(q) for q in range(1, grid_bound + 1)] for u in utilities]

    best_combo = None
    best_score = -float("inf")
    for combo in itertools.product(range(1, grid_bound + 1), repeat=m):
        if sum(combo) > bandwidth:
            continue
        # fsum keeps scores bit-identical to the discrete stage's scoring
        score = math.fsum(tables[i][q - 1] for i, q in enumerate(combo))
        if score > best_score:  # lex enumeration: first strict max is lex-smallest
            best_score = score
            best_combo = combo
    if best_combo is None:
        raise ExhaustedBandwidthError(m, bandwidth)

    best = RBVector(rbs=best_combo, log_utility=system_log_utility(RBVector(best_combo), utilities))
    return OracleResult(best=best, evaluated_count=grid_bound**m, grid_bound=grid_bound)


def brute_force_restricted(
    candidates: Sequence[RBVector], utilities: Sequence[UtilityFunction]
) -> RBVector:
    """Same dumb reduction, restricted to an explicit candidate list.

    Ties resolve to the earliest candidate, so a lexicographically ordered
    list gets the lexicographically smallest winner.
    """
    if not candidates:
        raise ValueError("candidate list is empty")
    best = None
    best_score = -float("inf")
    for c in candidates:
        score = system_log_utility(c, utilities)
        if score > best_score:
            best_score = score
            best = RBVector(rbs=c.rbs, log_utility=score)
    return best


def complexity_count(ue_count: int, candidates_per_ue: int) -> tuple[int, int]:
    """Search-space sizes (full grid, boundary-mapped) as exact integers."""
    if ue_count < 1:
        raise ValueError(f"ue_count must be >= 1, got {ue_count}")
    if candidates_per_ue < 1:
        raise ValueError(f"candidates_per_ue must be >= 1, got {candidates_per_ue}")
    return candidates_per_ue**ue_count, 2**ue_count
