"""FastAPI application exposing the law checkers and calculators."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..analysis import FUNCTIONS
from ..errors import ConvexAlgError, UnknownFunctionError, UnknownInstanceError
from ..registry import instance_names
from . import handlers
from .models import (
    BarycenterRequest,
    BarycenterResponse,
    ConvexCheckRequest,
    ConvexCheckResponse,
    DivergenceRequest,
    DivergenceResponse,
    HullSplitRequest,
    HullSplitResponse,
    LawsRequest,
    LawsResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="convexalg",
        description="Law checkers and calculators for convex and conical algebra",
    )

    @app.exception_handler(ConvexAlgError)
    async def _library_error(_request: Request, exc: ConvexAlgError) -> JSONResponse:
        status = 400 if isinstance(exc, (UnknownInstanceError, UnknownFunctionError)) else 422
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.get("/instances")
    async def instances() -> dict:
        return {"instances": instance_names()}

    @app.get("/functions")
    async def functions() -> dict:
        return {"functions": sorted(FUNCTIONS)}

    @app.post("/laws", response_model=LawsResponse)
    async def laws(req: LawsRequest) -> dict:
        return handlers.run_laws(req.instance, seed=req.seed, cases=req.cases)

    @app.post("/barycenter", response_model=BarycenterResponse)
    async def barycenter(req: BarycenterRequest) -> dict:
        return handlers.barycenter(req.instance, req.weights, req.points)

    @app.post("/hull-split", response_model=HullSplitResponse)
    async def hull_split(req: HullSplitRequest) -> dict:
        return handlers.hull_split(
            req.instance, req.witness.model_dump(), req.x_indices,
            req.default_x, req.default_y,
        )

    @app.post("/divergence", response_model=DivergenceResponse)
    async def divergence(req: DivergenceRequest) -> dict:
        return handlers.divergence(req.P.model_dump(), req.Q.model_dump())

    @app.post("/convex-check", response_model=ConvexCheckResponse)
    async def convex_check(req: ConvexCheckRequest) -> dict:
        return handlers.convex_check(
            req.fn, mode=req.mode, lo=req.lo, hi=req.hi,
            cases=req.cases, seed=req.seed, slack=req.slack,
            grid_points=req.grid_points,
        )

    return app
