"""FastAPI application over the shared handlers.

Input errors surface as 400 (unparseable payloads) or 422 (values a core
builder rejected); everything else is computed in process, no state.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, ops
from ..config import build_config
from ..errors import GeometryError, ParseError
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    DatasetRequest,
    DatasetResponse,
    Group33Request,
    Group33Response,
    HealthResponse,
    RepRequest,
    RepResponse,
    SelfTestResponse,
    TetraRequest,
    TetraResponse,
)

_TOL_KEYS = ("tol_f", "tol_rank", "tol_fix", "tol_bal", "tol_null")


def _cfg(req, extra: tuple[str, ...] = ()):
    overrides = {k: getattr(req, k) for k in _TOL_KEYS + extra}
    try:
        return build_config(None, **overrides)
    except GeometryError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _run(fn, *args):
    try:
        return fn(*args)
    except ParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except GeometryError as exc:
        raise HTTPException(
            status_code=422, detail=f"{type(exc).__name__}: {exc}"
        ) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="su21",
        version=__version__,
        description="Parabolic representations into SU(2,1): classifiers, "
                    "builders, and figure datasets.",
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest) -> dict:
        return _run(ops.classify_record, req.matrix, _cfg(req))

    @app.post("/tetra", response_model=TetraResponse)
    def tetra(req: TetraRequest) -> dict:
        return _run(ops.tetra_record, req.theta, req.phi, req.psi, req.r,
                    _cfg(req))

    @app.post("/rep", response_model=RepResponse)
    def rep(req: RepRequest) -> dict:
        la = None if req.lambda_a is None else complex(*req.lambda_a)
        lb = None if req.lambda_b is None else complex(*req.lambda_b)
        return _run(ops.rep_record, req.theta, req.phi, req.psi, la, lb,
                    _cfg(req))

    @app.post("/group33", response_model=Group33Response)
    def group33(req: Group33Request) -> dict:
        return _run(ops.group33_record, req.theta, req.phi, req.psi, _cfg(req))

    @app.post("/datasets/{name}", response_model=DatasetResponse)
    def dataset(name: str, req: DatasetRequest) -> dict:
        if name not in ops.DATASETS:
            raise HTTPException(
                status_code=404,
                detail=f"unknown dataset {name!r}; "
                       f"known: {', '.join(sorted(ops.DATASETS))}",
            )
        cfg = _cfg(req, extra=("samples", "resolution", "psi_slice", "seed"))
        ds = _run(ops.DATASETS[name], cfg)
        return {
            "name": ds.name,
            "header": list(ds.header),
            "rows": ops.render_json_rows(ds),
            "flagged": ds.flagged,
        }

    @app.post("/selftest", response_model=SelfTestResponse)
    def selftest(req: DatasetRequest) -> dict:
        cfg = _cfg(req, extra=("samples", "resolution", "psi_slice", "seed"))
        checks = _run(ops.selftest_report, cfg)
        return {
            "passed": all(c.passed for c in checks),
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in checks
            ],
        }

    return app


app = create_app()
