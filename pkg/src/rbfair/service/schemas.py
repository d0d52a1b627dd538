"""Request/response models for the allocation service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..solver import (
    ContinuousAllocation,
    ExponentialDamping,
    HarmonicDamping,
    Scenario,
    SolverParams,
    UEProfile,
)
from ..sweep import ComplexityRow, SweepRow
from ..utility import Logarithmic, Sigmoidal


class UESpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: int = Field(ge=1)
    utility: Literal["sigmoidal", "logarithmic"]
    a: Optional[float] = Field(default=None, gt=0)
    b: Optional[float] = Field(default=None, gt=0)
    k: Optional[float] = Field(default=None, gt=0)
    r_max: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _family_params(self):
        if self.utility == "sigmoidal":
            if self.a is None or self.b is None:
                raise ValueError(f"ue {self.id}: sigmoidal utility requires a and b")
            if self.k is not None or self.r_max is not None:
                raise ValueError(f"ue {self.id}: k/r_max do not apply to a sigmoidal utility")
        else:
            if self.k is None or self.r_max is None:
                raise ValueError(f"ue {self.id}: logarithmic utility requires k and r_max")
            if self.a is not None or self.b is not None:
                raise ValueError(f"ue {self.id}: a/b do not apply to a logarithmic utility")
        return self

    def to_profile(self) -> UEProfile:
        if self.utility == "sigmoidal":
            return UEProfile(self.id, Sigmoidal(a=self.a, b=self.b))
        return UEProfile(self.id, Logarithmic(k=self.k, r_max=self.r_max))

    @classmethod
    def from_profile(cls, ue: UEProfile) -> "UESpec":
        if isinstance(ue.utility, Sigmoidal):
            return cls(id=ue.ue_id, utility="sigmoidal", a=ue.utility.a, b=ue.utility.b)
        return cls(id=ue.ue_id, utility="logarithmic", k=ue.utility.k, r_max=ue.utility.r_max)


class SolverSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    delta: float = Field(default=1e-3, gt=0)
    max_iters: int = Field(default=40, ge=1)
    damping: Literal["harmonic", "exponential"] = "harmonic"
    l1: Optional[float] = Field(default=None, gt=0)
    l2: Optional[float] = Field(default=None, gt=0)
    l3: Optional[float] = Field(default=None, gt=0)
    w_init: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _damping_params(self):
        if self.damping == "harmonic":
            if self.l1 is not None or self.l2 is not None:
                raise ValueError("l1/l2 only apply to exponential damping")
        else:
            if self.l3 is not None:
                raise ValueError("l3 only applies to harmonic damping")
            if self.l1 is None or self.l2 is None:
                raise ValueError("exponential damping requires l1 and l2")
        return self

    def to_params(self) -> SolverParams:
        if self.damping == "harmonic":
            damping = HarmonicDamping(l3=self.l3 if self.l3 is not None else 10.0)
        else:
            damping = ExponentialDamping(l1=self.l1, l2=self.l2)
        return SolverParams(
            delta=self.delta, max_iters=self.max_iters, damping=damping, w_init=self.w_init
        )

    @classmethod
    def from_params(cls, params: SolverParams) -> "SolverSpec":
        if isinstance(params.damping, HarmonicDamping):
            return cls(
                delta=params.delta,
                max_iters=params.max_iters,
                damping="harmonic",
                l3=params.damping.l3,
                w_init=params.w_init,
            )
        return cls(
            delta=params.delta,
            max_iters=params.max_iters,
            damping="exponential",
            l1=params.damping.l1,
            l2=params.damping.l2,
            w_init=params.w_init,
        )


class ScenarioSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    bandwidth: float = Field(gt=0)
    ues: list[UESpec] = Field(min_length=1)
    solver: SolverSpec = Field(default_factory=SolverSpec)

    def to_scenario(self, bandwidth: Optional[float] = None) -> Scenario:
        # core Scenario enforces id contiguity and the bandwidth >= M floor
        return Scenario(
            ues=tuple(ue.to_profile() for ue in self.ues),
            bandwidth=self.bandwidth if bandwidth is None else bandwidth,
            params=self.solver.to_params(),
        )

    @classmethod
    def from_scenario(cls, scenario: Scenario) -> "ScenarioSpec":
        return cls(
            bandwidth=scenario.bandwidth,
            ues=[UESpec.from_profile(ue) for ue in scenario.ues],
            solver=SolverSpec.from_params(scenario.params),
        )


class TraceEntry(BaseModel):
    n: int
    price: float
    bids: list[float]


class ContinuousResult(BaseModel):
    rates: list[float]
    bids: list[float]
    price: float
    iterations: int
    converged: bool
    trace: Optional[list[TraceEntry]] = None

    @classmethod
    def from_allocation(
        cls, cont: ContinuousAllocation, include_trace: bool = False
    ) -> "ContinuousResult":
        trace = None
        if include_trace:
            trace = [TraceEntry(n=t.n, price=t.price, bids=list(t.bids)) for t in cont.trace]
        return cls(
            rates=list(cont.rates),
            bids=list(cont.bids),
            price=cont.price,
            iterations=cont.iterations,
            converged=cont.converged,
            trace=trace,
        )


class RBCandidate(BaseModel):
    rbs: list[int]
    total: int
    log_utility: float
    maximizer: bool


class AllocateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioSpec
    bandwidth: Optional[float] = Field(default=None, gt=0)  # overrides the scenario's
    pool: Literal["all", "max"] = "all"
    tie_tol: float = Field(default=1e-9, ge=0)
    include_trace: bool = False


class AllocateResponse(BaseModel):
    bandwidth: float
    continuous: ContinuousResult
    candidates: list[RBCandidate]


class SweepRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioSpec
    start: float = Field(gt=0)
    stop: float = Field(gt=0)
    step: float = Field(default=1.0, gt=0)


class SweepRowModel(BaseModel):
    bandwidth: float
    rates: list[float]
    bids: list[float]
    rbs: Optional[list[int]]
    converged: bool
    wall_time_s: float
    error: Optional[str] = None

    @classmethod
    def from_row(cls, row: SweepRow) -> "SweepRowModel":
        return cls(
            bandwidth=row.bandwidth,
            rates=list(row.rates),
            bids=list(row.bids),
            rbs=list(row.rbs) if row.rbs is not None else None,
            converged=row.converged,
            wall_time_s=row.wall_time_s,
            error=row.error,
        )


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]


class ComplexityRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ues_start: int = Field(ge=1)
    ues_stop: int = Field(ge=1)
    candidates_per_ue: int = Field(ge=1)


class ComplexityRowModel(BaseModel):
    ues: int
    full: str       # exact counts as decimal strings: they outgrow JSON numbers
    boundary: str
    log10_full: float
    log10_boundary: float

    @classmethod
    def from_row(cls, row: ComplexityRow) -> "ComplexityRowModel":
        return cls(
            ues=row.ues,
            full=str(row.full),
            boundary=str(row.boundary),
            log10_full=row.log10_full,
            log10_boundary=row.log10_boundary,
        )


class ComplexityResponse(BaseModel):
    rows: list[ComplexityRowModel]


class OracleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioSpec
    bandwidth: Optional[float] = Field(default=None, gt=0)
    grid_bound: int = Field(ge=1, le=128)


class OracleResponse(BaseModel):
    best: RBCandidate
    evaluated_count: int
    grid_bound: int
