"""Request and response models for the HTTP service.

Complex numbers travel as [re, im] pairs and 3x3 matrices as nested pair
arrays, matching the CLI's JSON records byte for byte.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

Pair = tuple[float, float]
Matrix = list[list[Pair]]


class ToleranceFields(BaseModel):
    tol_f: float | None = None
    tol_rank: float | None = None
    tol_fix: float | None = None
    tol_bal: float | None = None
    tol_null: float | None = None


class ClassifyRequest(ToleranceFields):
    matrix: Matrix


class ClassifyResponse(BaseModel):
    tag: str
    f_value: float
    trace: Pair
    neutral_eigenvalue: Pair | None
    parabolic: bool


class TetraRequest(ToleranceFields):
    theta: float
    phi: float
    psi: float
    r: float = 1.0


class TetraParamsModel(BaseModel):
    theta: float
    phi: float
    psi: float
    r: float


class BalanceModel(BaseModel):
    by_cross_ratio: bool
    by_projection: bool
    cross_ratio_residual: float
    projection_residual: float
    agree: bool


class TetraResponse(BaseModel):
    params: TetraParamsModel
    lifts: list[list[Pair]]
    cross_ratio: Pair
    bending: Pair
    balanced: bool
    balance: BalanceModel
    extracted_params: TetraParamsModel


class RepRequest(ToleranceFields):
    theta: float
    phi: float
    psi: float
    lambda_a: Pair | None = None
    lambda_b: Pair | None = None


class RepResponse(BaseModel):
    params: TetraParamsModel
    lambda_a: Pair
    lambda_b: Pair
    lambda_ab: Pair
    a: Matrix
    b: Matrix
    trace_a: Pair
    trace_b: Pair
    trace_ab: Pair
    class_a: str
    class_b: str
    class_ab: str
    form_residual_a: float
    form_residual_b: float


class Group33Request(ToleranceFields):
    theta: float
    phi: float
    psi: float


class GroupParamsModel(BaseModel):
    theta: float
    phi: float
    psi: float


class WordModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    trace: Pair
    trace_closed: Pair
    residual: float
    word_class: str = Field(alias="class")


class CoordsModel(BaseModel):
    x: float
    y: float
    z: float


class Group33Response(BaseModel):
    params: GroupParamsModel
    j1: Matrix
    j2: Matrix
    a: Matrix
    b: Matrix
    lambda_neutral: Pair
    words: dict[str, WordModel]
    coords: CoordsModel
    jacobian: float


class DatasetRequest(ToleranceFields):
    samples: int | None = None
    resolution: int | None = None
    psi_slice: float | None = None
    seed: int | None = None


class DatasetResponse(BaseModel):
    name: str
    header: list[str]
    rows: list[dict]
    flagged: int


class SelfTestCheck(BaseModel):
    name: str
    passed: bool
    detail: str


class SelfTestResponse(BaseModel):
    passed: bool
    checks: list[SelfTestCheck]


class HealthResponse(BaseModel):
    status: str
    version: str
