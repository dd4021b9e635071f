"""HTTP service exposing the simulator: submit circuit text, get results back.

Endpoints:
    GET  /health   liveness and version
    POST /run      execute a circuit, returns the measurement payload
    POST /check    parse + validate only, returns diagnostics
    POST /wigner   Wigner grid of a single-mode state spec

Circuit errors come back as 400 with one {line, reason} entry per finding.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .circuit import CircuitError
from . import runner

app = FastAPI(
    title="dualsim",
    description="Dual-paradigm quantum circuit simulator (qubit statevectors and Fock-truncated qumodes).",
    version=__version__,
)


class HealthResponse(BaseModel):
    status: str
    version: str


class RunRequest(BaseModel):
    circuit: str = Field(description="Circuit DSL text")
    seed: int = runner.DEFAULT_SEED
    shots: int | None = Field(default=None, description="Override for 'measure sample' circuits")


class RunResponse(BaseModel):
    paradigm: str
    wires: int
    cutoff: int | None = None
    method: str
    shots: int | None = None
    seed: int
    labels: list[str]
    values: list[float]


class DiagnosticModel(BaseModel):
    line: int
    reason: str


class CheckRequest(BaseModel):
    circuit: str


class CheckResponse(BaseModel):
    ok: bool
    errors: list[DiagnosticModel]


class WignerRequest(BaseModel):
    state: str = Field(description="'fock N CUTOFF' or 'squeeze Z CUTOFF'")
    xmin: float = -3.0
    xmax: float = 3.0
    pmin: float = -3.0
    pmax: float = 3.0
    resolution: int = 21


class WignerResponse(BaseModel):
    x: list[float]
    p: list[float]
    w: list[float]


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/run", response_model=RunResponse, response_model_exclude_none=True)
def run(request: RunRequest) -> RunResponse:
    try:
        payload, _ = runner.run_circuit_text(request.circuit, seed=request.seed, shots=request.shots)
    except CircuitError as err:
        raise HTTPException(
            status_code=400,
            detail=[{"line": d.line, "reason": d.reason} for d in err.diagnostics],
        ) from None
    return RunResponse(**payload)


@app.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    diagnostics = runner.check_circuit_text(request.circuit)
    return CheckResponse(
        ok=not diagnostics,
        errors=[DiagnosticModel(line=d.line, reason=d.reason) for d in diagnostics],
    )


@app.post("/wigner", response_model=WignerResponse)
def wigner_endpoint(request: WignerRequest) -> WignerResponse:
    try:
        state = runner.parse_state_spec(request.state.split())
        rows = runner.wigner_rows(
            state, request.xmin, request.xmax, request.pmin, request.pmax, request.resolution
        )
    except ValueError as err:
        raise HTTPException(status_code=400, detail=str(err)) from None
    return WignerResponse(
        x=[r[0] for r in rows], p=[r[1] for r in rows], w=[r[2] for r in rows]
    )
