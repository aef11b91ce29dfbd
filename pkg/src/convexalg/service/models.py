"""Request and response schemas for the HTTP endpoints."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field


class LawEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    law: str
    cases: int
    failures: int
    passed: bool = Field(alias="pass")
    counterexample: dict[str, Any] | None = None
    meta: dict[str, int] | None = None


class LawsRequest(BaseModel):
    instance: str
    seed: int = 0
    cases: int = Field(default=500, ge=1, le=100_000)


class LawsResponse(BaseModel):
    instance: str
    seed: int
    cases: int
    ok: bool
    laws: list[LawEntry]


class WitnessModel(BaseModel):
    weights: list[str]
    generators: list[Any]


class BarycenterRequest(BaseModel):
    instance: str
    weights: list[str]
    points: list[Any]


class BarycenterResponse(BaseModel):
    instance: str
    weights: list[str]
    point: Any


class HullSplitRequest(BaseModel):
    instance: str
    witness: WitnessModel
    x_indices: list[int]
    default_x: Any
    default_y: Any


class HullSplitResponse(BaseModel):
    instance: str
    p: str
    x: WitnessModel
    y: WitnessModel
    point: Any
    reconstructed: bool


class DistModel(BaseModel):
    weights: list[str]


class DivergenceRequest(BaseModel):
    P: DistModel
    Q: DistModel


class DivergenceResponse(BaseModel):
    P: list[str]
    Q: list[str]
    dominated: bool
    divergence: str


class ConvexCheckRequest(BaseModel):
    fn: str
    mode: Literal["convex", "concave"] = "convex"
    lo: float
    hi: float
    cases: int = Field(default=10_000, ge=1, le=1_000_000)
    seed: int = 0
    slack: float = Field(default=1e-9, ge=0)
    grid_points: int = Field(default=0, ge=0)


class ConvexCheckResponse(BaseModel):
    function: str
    mode: str
    interval: list[str]
    seed: int
    cases: int
    slack: str
    ok: bool
    laws: list[LawEntry]
