"""Integer resource-block selection around the continuous optimum.

Each continuous rate is replaced by its floor/ceiling neighbours (floors
below one unit are lifted to one: proportional fairness forbids empty
allocations), giving at most 2^M candidate vectors instead of the full
integer grid.  Candidates whose total exceeds the bandwidth are dropped,
the rest are scored by the sum of log-satisfactions, and the top scorers
(within a tie band) are returned.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .exceptions import ExhaustedBandwidthError
from .solver import ContinuousAllocation, Scenario, solve_continuous
from .utility import UtilityFunction

DEFAULT_TIE_TOL = 1e-9


@dataclass(frozen=True)
class RBVector:
    """One candidate integer allocation; log_utility is attached when scored."""

    rbs: tuple[int, ...]
    log_utility: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "rbs", tuple(self.rbs))
        if len(self.rbs) == 0:
            raise ValueError("allocation must cover at least one UE")
        if any(q < 1 for q in self.rbs):
            raise ValueError(f"every UE gets at least one resource block, got {self.rbs}")

    @property
    def total(self) -> int:
        return sum(self.rbs)


@dataclass(frozen=True)
class AllocationResult:
    continuous: ContinuousAllocation
    feasible_pool: tuple[RBVector, ...]   # lexicographic order, scored
    maximizers: tuple[RBVector, ...]      # pool members within tie_tol of the best


def boundary_candidates(rates: Sequence[float]) -> list[RBVector]:
    """Floor/ceiling neighbours of the continuous rates, in lexicographic order.

    Sub-unity floors map to 1; exact integers collapse to a single value.
    The result has at most 2^M entries and carries no scores yet.
    """
    if any(r <= 0 for r in rates):
        raise ValueError(f"rates must be > 0, got {list(rates)}")
    per_ue = [sorted({max(1, math.floor(r)), math.ceil(r)}) for r in rates]
    return [RBVector(rbs=combo) for combo in itertools.product(*per_ue)]


def filter_feasible(candidates: Sequence[RBVector], bandwidth: float) -> list[RBVector]:
    """Keep candidates whose total fits the bandwidth; order preserved.

    An empty result is legal output: it means rounding alone exhausted the
    budget and is the caller's signal to fail loudly.
    """
    return [c for c in candidates if c.total <= bandwidth]


def system_log_utility(rbs: RBVector, utilities: Sequence[UtilityFunction]) -> float:
    """Sum of log-satisfactions of one candidate (log of the utility product)."""
    if len(rbs.rbs) != len(utilities):
        raise ValueError(
            f"allocation covers {len(rbs.rbs)} UEs but {len(utilities)} utilities given"
        )
    return math.fsum(u.log_evaluate(q) for u, q in zip(utilities, rbs.rbs))


def select_maximizers(
    pool: Sequence[RBVector],
    utilities: Sequence[UtilityFunction],
    tie_tol: float = DEFAULT_TIE_TOL,
) -> list[RBVector]:
    """Pool members whose score is within tie_tol of the maximum, order preserved."""
    if tie_tol < 0:
        raise ValueError(f"tie_tol must be >= 0, got {tie_tol}")
    if not pool:
        return []
    scored = [
        c if c.log_utility is not None else replace(c, log_utility=system_log_utility(c, utilities))
        for c in pool
    ]
    best = max(c.log_utility for c in scored)
    return [c for c in scored if c.log_utility >= best - tie_tol]


def allocate(scenario: Scenario, tie_tol: float = DEFAULT_TIE_TOL) -> AllocationResult:
    """Full pipeline: continuous solve, rounding, feasibility filter, selection."""
    continuous = solve_continuous(scenario)
    candidates = boundary_candidates(continuous.rates)
    feasible = filter_feasible(candidates, scenario.bandwidth)
    if not feasible:
        smallest = min(c.total for c in candidates)
        raise ExhaustedBandwidthError(smallest, scenario.bandwidth)
    utilities = scenario.utilities
    scored = [replace(c, log_utility=system_log_utility(c, utilities)) for c in feasible]
    maximizers = select_maximizers(scored, utilities, tie_tol)
    return AllocationResult(
        continuous=continuous,
        feasible_pool=tuple(scored),
        maximizers=tuple(maximizers),
    )
