"""JSON-over-HTTP compute service.

Every response body is rendered with :func:`gsv.serialize.canonical_json`,
so repeated requests for the same graph ID are byte-identical.  Engine
calls are pure and run in the request threadpool; the shared cache
serializes appends internally.

Status mapping: 400 malformed graph ID or parameters, 404 unknown
route, 413 component above the hard cap, 422 component above the
auto-limit without force=true, 503 cache store unavailable.
"""

from __future__ import annotations

import itertools
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError

from . import ENGINE_VERSION, __version__
from .cache import SldCache, cached_sld_of_graph
from .errors import (
    AutoLimitExceeded,
    CacheIOError,
    DomainError,
    HardCapExceeded,
)
from .graph import GraphKind, decode_graph_id, encode_graph_id, generate
from .sld import decay, ensure_computable, threshold_report
from .stabilizer import ENUMERATION_CAP, enumerate_stabilizers

DEFAULT_STABILIZER_LIMIT = 1024


def _json(payload, status: int = 200) -> Response:
    from .serialize import canonical_json

    return Response(
        content=canonical_json(payload),
        status_code=status,
        media_type="application/json",
    )


def _error(status: int, message: str) -> Response:
    return _json({"detail": message}, status=status)


def create_app(cache_path: str | Path | None = None, frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="gsv", version=__version__)
    app.state.cache = SldCache(cache_path)

    @app.exception_handler(HardCapExceeded)
    async def _hard_cap(request: Request, exc: HardCapExceeded):
        return _error(413, str(exc))

    @app.exception_handler(AutoLimitExceeded)
    async def _auto_limit(request: Request, exc: AutoLimitExceeded):
        return _error(422, str(exc))

    @app.exception_handler(DomainError)
    async def _domain(request: Request, exc: DomainError):
        return _error(400, str(exc))

    @app.exception_handler(CacheIOError)
    async def _cache_io(request: Request, exc: CacheIOError):
        return _error(503, str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation(request: Request, exc: RequestValidationError):
        return _error(400, f"malformed request parameters: {exc.errors()}")

    @app.get("/api/v1/health")
    def health():
        return _json({"status": "ok", "engineVersion": ENGINE_VERSION})

    @app.get("/api/v1/predefined")
    def predefined():
        return _json({"kinds": [kind.value for kind in GraphKind]})

    @app.get("/api/v1/random")
    def random_graph(n: int, p: float, seed: int):
        g = generate(GraphKind.RANDOM, n, p=p, seed=seed)
        return _json({"id": encode_graph_id(g), "n": n, "p": p, "seed": seed})

    @app.get("/api/v1/graphs/{graph_id}")
    def get_graph(graph_id: str):
        g = decode_graph_id(graph_id)
        return _json(
            {
                "id": encode_graph_id(g),
                "graph": g.to_json(),
                "properties": g.properties().to_json(),
            }
        )

    @app.get("/api/v1/graphs/{graph_id}/sld")
    def get_sld(graph_id: str, noise: float | None = None, force: bool = False):
        g = decode_graph_id(graph_id)
        ensure_computable(g, force=force)
        sld = cached_sld_of_graph(g, app.state.cache)
        payload = sld.to_json()
        if noise is not None:
            decayed = decay(sld, noise)
            payload["p"] = decayed.p
            payload["values"] = list(decayed.values)
        return _json(payload)

    @app.get("/api/v1/graphs/{graph_id}/thresholds")
    def get_thresholds(graph_id: str, force: bool = False):
        g = decode_graph_id(graph_id)
        ensure_computable(g, force=force)
        sld = cached_sld_of_graph(g, app.state.cache)
        return _json(threshold_report(g, sld).to_json())

    @app.get("/api/v1/graphs/{graph_id}/stabilizers")
    def get_stabilizers(graph_id: str, limit: int = DEFAULT_STABILIZER_LIMIT):
        g = decode_graph_id(graph_id)
        if g.n > ENUMERATION_CAP:
            raise HardCapExceeded(
                f"stabilizer enumeration is capped at {ENUMERATION_CAP} vertices",
                size=g.n,
                limit=ENUMERATION_CAP,
            )
        if limit < 0:
            raise DomainError(f"limit must be nonnegative, got {limit}")
        rendered = [
            element.to_json()
            for element in itertools.islice(enumerate_stabilizers(g), limit)
        ]
        return _json({"total": 1 << g.n, "limit": limit, "stabilizers": rendered})

    @app.post("/api/v1/graphs/{graph_id}/lc/{vertex}")
    def local_complement(graph_id: str, vertex: int):
        g = decode_graph_id(graph_id)
        return _json({"id": encode_graph_id(g.local_complement(vertex))})

    if frontend_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="frontend")

    return app
