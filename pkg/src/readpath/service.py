"""HTTP face of the query engine.

Endpoints:
    POST /api/query       {"phrases": [...], "k_seeds"?, "k_output"?, "cutoff_year"?}
    GET  /api/paper/{id}  paper metadata
    GET  /api/health      {"status", "corpus_size"}

Status codes: 400 for anything malformed in the request, 404 for an unknown
paper id, 422 when a well-formed query yields no usable seed papers, 500
with an opaque incident id for internal faults. The corpus is loaded once
and shared read-only, so concurrent requests never interfere.
"""

from __future__ import annotations

import logging
import uuid

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.concurrency import run_in_threadpool

from .corpus import CorpusError
from .engine import Engine, NoSeedsError
from .seeding import TerminalMode

log = logging.getLogger(__name__)

QUERY_KEYS = {"phrases", "k_seeds", "k_output", "cutoff_year", "terminal_mode"}


def _bad_request(detail: str) -> HTTPException:
    return HTTPException(status_code=400, detail=detail)


def _parse_query_body(body: object) -> dict:
    if not isinstance(body, dict):
        raise _bad_request("request body must be a JSON object")
    unknown = sorted(set(body) - QUERY_KEYS)
    if unknown:
        raise _bad_request(f"unknown fields: {', '.join(unknown)}")
    phrases = body.get("phrases")
    if (
        not isinstance(phrases, list)
        or not phrases
        or not all(isinstance(p, str) and p.strip() for p in phrases)
    ):
        raise _bad_request("phrases must be a non-empty list of non-empty strings")
    out: dict = {"key_phrases": [p.strip() for p in phrases]}
    for key in ("k_seeds", "k_output", "cutoff_year"):
        if key in body and body[key] is not None:
            val = body[key]
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise _bad_request(f"{key} must be a positive integer")
            out[key] = val
    if "terminal_mode" in body and body["terminal_mode"] is not None:
        try:
            out["terminal_mode"] = TerminalMode(body["terminal_mode"])
        except ValueError:
            names = ", ".join(m.value for m in TerminalMode)
            raise _bad_request(f"terminal_mode must be one of: {names}") from None
    return out


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="reading path service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(engine.config.service.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(Exception)
    async def internal_fault(request: Request, exc: Exception) -> JSONResponse:
        incident = uuid.uuid4().hex[:12]
        log.exception("incident %s on %s %s", incident, request.method, request.url.path)
        return JSONResponse(
            status_code=500,
            content={"detail": "internal error", "incident": incident},
        )

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "corpus_size": len(engine.graph)}

    @app.get("/api/paper/{paper_id}")
    def paper(paper_id: str) -> dict:
        try:
            return engine.paper_info(paper_id)
        except CorpusError:
            raise HTTPException(status_code=404, detail=f"unknown paper id: {paper_id}") from None

    @app.post("/api/query")
    async def query(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise _bad_request("request body must be valid JSON") from None
        kwargs = _parse_query_body(body)
        try:
            result = await run_in_threadpool(engine.run_query, **kwargs)
        except NoSeedsError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return result.to_dict(engine.graph)

    return app


def serve(engine: Engine, host: str | None = None, port: int | None = None) -> None:
    import uvicorn

    svc = engine.config.service
    uvicorn.run(
        create_app(engine),
        host=host if host is not None else svc.host,
        port=port if port is not None else svc.port,
        log_level="info",
    )
