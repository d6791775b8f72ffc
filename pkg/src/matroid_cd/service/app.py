"""HTTP API over the analysis core.

Every route is a thin adapter: resolve the input, call the core, shape
the dict into a response model.  Domain errors map to structured 4xx
bodies so the CLI can translate them to exit status 2.
"""

from __future__ import annotations

from collections import Counter

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import zoo
from ..audit import MAX_ELEMENTS_CAP, run_audits
from ..corpus import binary_census
from ..errors import CapExceededError, InvalidConstructionError, MalformedInputError, MatroidError
from ..exminors import enumerate_m_family, is_excluded_series_minor
from ..io import parse_text, serialize_matrix
from ..matroid import BinaryMatroid
from ..reports import analyze_report, circuits_report, recognize_report
from .models import (
    AnalyzeResponse,
    AuditRequest,
    AuditResponse,
    CensusRequest,
    CensusResponse,
    CircuitsResponse,
    ExminorEntry,
    ExminorsRequest,
    ExminorsResponse,
    HealthResponse,
    MatroidInput,
    MatroidRequest,
    RecognitionResponse,
)


def _error_payload(exc: MatroidError) -> tuple[int, dict]:
    if isinstance(exc, CapExceededError):
        return 422, {
            "type": "cap-exceeded",
            "message": str(exc),
            "dimension": exc.dimension,
            "cap": exc.cap,
        }
    if isinstance(exc, MalformedInputError):
        return 400, {"type": "malformed-input", "message": str(exc), "line": exc.line}
    if isinstance(exc, InvalidConstructionError):
        return 400, {"type": "invalid-construction", "message": str(exc)}
    return 400, {"type": type(exc).__name__, "message": str(exc)}


def _resolve(inp: MatroidInput) -> BinaryMatroid:
    if inp.text is not None:
        return parse_text(inp.text)
    return zoo.make(inp.name)


def create_app() -> FastAPI:
    app = FastAPI(
        title="matroid-cd",
        version="0.1.0",
        description="Circuit-difference analysis of binary matroids",
    )

    @app.exception_handler(MatroidError)
    async def matroid_error_handler(request: Request, exc: MatroidError) -> JSONResponse:
        status, body = _error_payload(exc)
        return JSONResponse(status_code=status, content={"error": body})

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse(status="ok")

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze(req: MatroidRequest) -> dict:
        return analyze_report(_resolve(req.matroid))

    @app.post("/circuits", response_model=CircuitsResponse)
    def circuits(req: MatroidRequest) -> dict:
        return circuits_report(_resolve(req.matroid))

    @app.post("/recognize", response_model=RecognitionResponse)
    def recognize(req: MatroidRequest) -> dict:
        return recognize_report(_resolve(req.matroid))

    @app.post("/audit", response_model=AuditResponse)
    def audit(req: AuditRequest) -> AuditResponse:
        try:
            results = run_audits(req.max_elements, req.seed, req.lemma)
        except ValueError as exc:
            # unknown lemma filter
            raise InvalidConstructionError(str(exc)) from exc
        return AuditResponse(
            max_elements=req.max_elements,
            seed=req.seed,
            passed=all(r.passed for r in results),
            results=[r.to_dict() for r in results],
        )

    @app.post("/exminors", response_model=ExminorsResponse)
    def exminors(req: ExminorsRequest) -> ExminorsResponse:
        if req.rank not in (3, 4, 5):
            raise InvalidConstructionError("exminors rank must be 3, 4, or 5")
        entries = []
        for member in enumerate_m_family(req.rank):
            dual = member.dual()
            entries.append(
                ExminorEntry(
                    size=member.size,
                    rank=member.rank,
                    member=serialize_matrix(member),
                    dual=serialize_matrix(dual),
                    verified=is_excluded_series_minor(dual),
                )
            )
        return ExminorsResponse(rank=req.rank, count=len(entries), entries=entries)

    @app.post("/census", response_model=CensusResponse)
    def census(req: CensusRequest) -> CensusResponse:
        if req.elements < 1 or req.elements > MAX_ELEMENTS_CAP:
            raise CapExceededError(
                f"census size must be between 1 and {MAX_ELEMENTS_CAP}",
                dimension=req.elements,
                cap=MAX_ELEMENTS_CAP,
            )
        result = binary_census(req.elements, simple=req.simple)
        by_size = Counter(m.size for m in result.members)
        return CensusResponse(
            max_elements=req.elements,
            simple=req.simple,
            total=len(result.members),
            by_size=dict(sorted(by_size.items())),
            signature_deduped=result.signature_deduped,
            members=[serialize_matrix(m) for m in result.members],
        )

    return app


app = create_app()
