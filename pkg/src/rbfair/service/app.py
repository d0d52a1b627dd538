"""HTTP service wrapping the allocation engine.

Endpoints mirror the engine's verbs: /allocate for one bandwidth, /sweep for
a bandwidth range, /complexity for search-space tables, /oracle for the
brute-force ground truth on small instances.  Input shape errors come back
as 422 (pydantic), domain/invariant violations as 400, and an exhausted
bandwidth (no feasible rounding) as 409.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..discrete import allocate
from ..exceptions import ExhaustedBandwidthError
from ..oracle import brute_force_discrete
from ..sweep import report_complexity, run_sweep
from .schemas import (
    AllocateRequest,
    AllocateResponse,
    ComplexityRequest,
    ComplexityResponse,
    ComplexityRowModel,
    ContinuousResult,
    OracleRequest,
    OracleResponse,
    RBCandidate,
    SweepRequest,
    SweepResponse,
    SweepRowModel,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="rbfair",
        version=__version__,
        description="Utility-proportional-fair resource block allocation",
    )

    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(ExhaustedBandwidthError)
    async def _exhausted(request: Request, exc: ExhaustedBandwidthError):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/allocate", response_model=AllocateResponse)
    def allocate_endpoint(req: AllocateRequest) -> AllocateResponse:
        scenario = req.scenario.to_scenario(bandwidth=req.bandwidth)
        result = allocate(scenario, tie_tol=req.tie_tol)
        max_keys = {c.rbs for c in result.maximizers}
        members = result.maximizers if req.pool == "max" else result.feasible_pool
        candidates = [
            RBCandidate(
                rbs=list(c.rbs),
                total=c.total,
                log_utility=c.log_utility,
                maximizer=c.rbs in max_keys,
            )
            for c in members
        ]
        return AllocateResponse(
            bandwidth=scenario.bandwidth,
            continuous=ContinuousResult.from_allocation(result.continuous, req.include_trace),
            candidates=candidates,
        )

    @app.post("/sweep", response_model=SweepResponse)
    def sweep_endpoint(req: SweepRequest) -> SweepResponse:
        scenario = req.scenario.to_scenario()
        rows = run_sweep(scenario, req.start, req.stop, req.step)
        return SweepResponse(rows=[SweepRowModel.from_row(r) for r in rows])

    @app.post("/complexity", response_model=ComplexityResponse)
    def complexity_endpoint(req: ComplexityRequest) -> ComplexityResponse:
        if req.ues_stop < req.ues_start:
            raise ValueError(f"ues_stop {req.ues_stop} is below ues_start {req.ues_start}")
        rows = report_complexity(
            range(req.ues_start, req.ues_stop + 1), req.candidates_per_ue
        )
        return ComplexityResponse(rows=[ComplexityRowModel.from_row(r) for r in rows])

    @app.post("/oracle", response_model=OracleResponse)
    def oracle_endpoint(req: OracleRequest) -> OracleResponse:
        scenario = req.scenario.to_scenario(bandwidth=req.bandwidth)
        result = brute_force_discrete(scenario, req.grid_bound)
        return OracleResponse(
            best=RBCandidate(
                rbs=list(result.best.rbs),
                total=result.best.total,
                log_utility=result.best.log_utility,
                maximizer=True,
            ),
            evaluated_count=result.evaluated_count,
            grid_bound=result.grid_bound,
        )

    return app


app = create_app()
