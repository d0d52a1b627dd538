"""Continuous rate allocation by iterated bidding against a shadow price.

The relaxed problem (maximise the product of user satisfactions subject to
the bandwidth budget) decomposes into per-user subproblems coupled only
through a price.  Each round the base station prices bandwidth at
``sum(bids) / bandwidth``; each user responds with its optimal rate at that
price and re-bids ``price * rate``, with the per-round bid movement clamped
by a decaying damping schedule.  The loop stops when no bid moved by more
than ``delta``, or after ``max_iters`` rounds (not an error: scarce-budget
scenarios oscillate and are reported with ``converged=False``).

Final rates are ``bid / final_price``, which sum to the bandwidth exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

from .exceptions import DegeneratePriceError
from .utility import UtilityFunction, inverse_slope


@dataclass(frozen=True)
class ExponentialDamping:
    """Bid step cap l1 * e^{-n/l2} at round n."""

    l1: float
    l2: float

    def __post_init__(self):
        if not self.l1 > 0 or not self.l2 > 0:
            raise ValueError(f"damping constants must be > 0, got l1={self.l1}, l2={self.l2}")

    def step(self, n: int) -> float:
        return self.l1 * math.exp(-n / self.l2)


@dataclass(frozen=True)
class HarmonicDamping:
    """Bid step cap l3 / n at round n."""

    l3: float

    def __post_init__(self):
        if not self.l3 > 0:
            raise ValueError(f"damping constant must be > 0, got l3={self.l3}")

    def step(self, n: int) -> float:
        return self.l3 / n


Damping = Union[ExponentialDamping, HarmonicDamping]


@dataclass(frozen=True)
class SolverParams:
    delta: float = 1e-3          # bid-convergence threshold
    max_iters: int = 40
    damping: Damping = HarmonicDamping(10.0)
    w_init: float = 1.0          # every user's opening bid

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"delta must be > 0, got {self.delta}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not self.w_init > 0:
            raise ValueError(f"w_init must be > 0, got {self.w_init}")


@dataclass(frozen=True)
class UEProfile:
    ue_id: int
    utility: UtilityFunction


@dataclass(frozen=True)
class Scenario:
    """One cell: the users and the base station bandwidth."""

    ues: tuple[UEProfile, ...]
    bandwidth: float
    params: SolverParams = field(default_factory=SolverParams)

    def __post_init__(self):
        object.__setattr__(self, "ues", tuple(self.ues))
        if len(self.ues) == 0:
            raise ValueError("scenario needs at least one UE")
        ids = [ue.ue_id for ue in self.ues]
        if ids != list(range(1, len(ids) + 1)):
            raise ValueError(f"ue ids must be contiguous from 1, got {ids}")
        if not self.bandwidth >= len(self.ues):
            raise ValueError(
                f"bandwidth {self.bandwidth} is below the UE count {len(self.ues)}; "
                "every UE must be allocatable at least one resource block"
            )

    @classmethod
    def from_utilities(
        cls,
        utilities: Sequence[UtilityFunction],
        bandwidth: float,
        params: SolverParams = SolverParams(),
    ) -> "Scenario":
        ues = tuple(UEProfile(i + 1, u) for i, u in enumerate(utilities))
        return cls(ues=ues, bandwidth=bandwidth, params=params)

    @property
    def utilities(self) -> tuple[UtilityFunction, ...]:
        return tuple(ue.utility for ue in self.ues)


@dataclass(frozen=True)
class IterationRecord:
    n: int
    price: float
    bids: tuple[float, ...]


@dataclass(frozen=True)
class ContinuousAllocation:
    rates: tuple[float, ...]
    bids: tuple[float, ...]
    price: float
    iterations: int
    converged: bool
    trace: tuple[IterationRecord, ...]


def ue_rate_response(u: UtilityFunction, p: float) -> float:
    """The user's optimal rate at price p: argmax of log_evaluate(r) - p*r."""
    return inverse_slope(u, p)


def ue_bid_update(
    prev_bid: float, p: float, u: UtilityFunction, n: int, params: SolverParams
) -> float:
    """New bid p * rate_response, moved from prev_bid by at most the damping step."""
    if n < 1:
        raise ValueError(f"round index must be >= 1, got {n}")
    w_raw = p * ue_rate_response(u, p)
    dw = params.damping.step(n)
    if abs(w_raw - prev_bid) > dw:
        return prev_bid + math.copysign(dw, w_raw - prev_bid)
    return w_raw


def enb_price_update(bids: Sequence[float], bandwidth: float) -> float:
    """Shadow price sum(bids) / bandwidth (order-independent via fsum)."""
    if any(b < 0 for b in bids):
        raise ValueError("bids must be non-negative")
    if not bandwidth > 0:
        raise ValueError(f"bandwidth must be > 0, got {bandwidth}")
    total = math.fsum(bids)
    if total <= 0:
        raise DegeneratePriceError("all bids are zero; price would be degenerate")
    return total / bandwidth


def solve_continuous(scenario: Scenario) -> ContinuousAllocation:
    """Run the synchronous bid/price rounds until bids settle or the budget runs out.

    Deterministic for a given scenario: every user sees the same price within a
    round and updates simultaneously.
    """
    params = scenario.params
    utilities = scenario.utilities
    m = len(utilities)

    w_prev = [0.0] * m               # comparator seed for round 1
    w = [params.w_init] * m
    trace: list[IterationRecord] = []
    converged = False
    rounds = 0

    for n in range(1, params.max_iters + 1):
        if max(abs(wi - wp) for wi, wp in zip(w, w_prev)) < params.delta:
            converged = True
            break
        p = enb_price_update(w, scenario.bandwidth)
        trace.append(IterationRecord(n=n, price=p, bids=tuple(w)))
        w_next = [ue_bid_update(w[i], p, utilities[i], n, params) for i in range(m)]
        w_prev, w = w, w_next
        rounds = n
    else:
        converged = max(abs(wi - wp) for wi, wp in zip(w, w_prev)) < params.delta

    price = enb_price_update(w, scenario.bandwidth)
    rates = tuple(wi / price for wi in w)
    return ContinuousAllocation(
        rates=rates,
        bids=tuple(w),
        price=price,
        iterations=rounds,
        converged=converged,
        trace=tuple(trace),
    )
