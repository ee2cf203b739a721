"""HTTP JSON API over loaded models: the backend of the explorer app.

Every endpoint is a pure delegation to the query/analogy/viz modules; the
registry is built eagerly at startup and never mutated, so request
handling needs no locks.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from motvec import analogy as analogy_mod
from motvec import query as query_mod
from motvec import viz as viz_mod
from motvec.errors import (
    OovWord,
    PerplexityTooLarge,
    TooFewPoints,
    UnknownModel,
)
from motvec.store import EmbeddingSet, NormalizedView, load_embeddings, normalize

BIND_ENV_VAR = "MOTVEC_BIND"
DEFAULT_BIND = "127.0.0.1:8000"


@dataclass
class LoadedModel:
    name: str
    embeddings: EmbeddingSet
    view: NormalizedView


class ModelRegistry:
    """Immutable name -> (embeddings, normalized view) map with a default."""

    def __init__(self, models: list[LoadedModel], default: str | None = None):
        if not models:
            raise ValueError("registry needs at least one model")
        self.models = {m.name: m for m in models}
        if len(self.models) != len(models):
            raise ValueError("model names must be unique")
        self.default = default or models[0].name
        if self.default not in self.models:
            raise UnknownModel(f"default model {self.default!r} not loaded")

    def get(self, name: str | None) -> LoadedModel:
        key = name or self.default
        if key not in self.models:
            raise UnknownModel(f"unknown model {key!r}")
        return self.models[key]


@dataclass
class ServerConfig:
    model_paths: list[tuple[str, str]]
    default: str | None = None
    bind: str = DEFAULT_BIND
    cors_origins: tuple[str, ...] = ("*",)
    static_dir: str | None = None

    @classmethod
    def from_file(cls, path: str | Path) -> "ServerConfig":
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        models = [(m["name"], m["path"]) for m in raw.get("models", [])]
        return cls(
            model_paths=models,
            default=raw.get("default"),
            bind=os.environ.get(BIND_ENV_VAR) or raw.get("bind", DEFAULT_BIND),
            cors_origins=tuple(raw.get("cors", ["*"])),
            static_dir=raw.get("static"),
        )


def load_registry(config: ServerConfig) -> ModelRegistry:
    """Eagerly load every configured model; a missing file aborts startup."""
    loaded = []
    for name, path in config.model_paths:
        if not Path(path).exists():
            raise OSError(f"model file not found: {path}")
        emb = load_embeddings(path)
        loaded.append(LoadedModel(name, emb, normalize(emb)))
    return ModelRegistry(loaded, config.default)


class AnalogyBody(BaseModel):
    model: str | None = None
    a: str
    b: str
    c: str
    k: int = 10


class SimilarityBody(BaseModel):
    model: str | None = None
    w1: str
    w2: str


class NeighborsBody(BaseModel):
    model: str | None = None
    word: str
    k: int = 10


class VisualizeBody(BaseModel):
    model: str | None = None
    word: str
    n: int = 200
    k: int = 8
    seed: int = 1


def create_app(
    registry: ModelRegistry,
    cors_origins: tuple[str, ...] = ("*",),
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="motvec explorer API")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(UnknownModel)
    async def _unknown_model(request: Request, exc: UnknownModel):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(OovWord)
    async def _oov(request: Request, exc: OovWord):
        return JSONResponse(
            status_code=422, content={"detail": str(exc), "token": exc.token}
        )

    @app.exception_handler(RequestValidationError)
    async def _bad_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    for bad_shape in (ValueError, TooFewPoints, PerplexityTooLarge):

        @app.exception_handler(bad_shape)
        async def _bad_request(request: Request, exc: Exception):
            return JSONResponse(status_code=400, content={"detail": str(exc)})

    def timed(model: LoadedModel, started: float, payload: dict) -> dict:
        payload["model"] = model.name
        payload["elapsedMs"] = round((time.perf_counter() - started) * 1000.0, 3)
        return payload

    @app.get("/api/models")
    def list_models():
        return {
            "models": [
                {"name": m.name, "vocabSize": len(m.view), "dim": m.view.dim}
                for m in registry.models.values()
            ],
            "default": registry.default,
        }

    @app.post("/api/analogy")
    def post_analogy(body: AnalogyBody):
        started = time.perf_counter()
        model = registry.get(body.model)
        results = analogy_mod.solve_analogy(model.view, body.a, body.b, body.c, k=body.k)
        return timed(
            model,
            started,
            {"results": [{"word": w, "score": s} for w, s in results]},
        )

    @app.post("/api/similarity")
    def post_similarity(body: SimilarityBody):
        started = time.perf_counter()
        model = registry.get(body.model)
        value = query_mod.cosine(model.view, body.w1, body.w2)
        return timed(model, started, {"cosine": value})

    @app.post("/api/neighbors")
    def post_neighbors(body: NeighborsBody):
        started = time.perf_counter()
        model = registry.get(body.model)
        results = query_mod.neighbors(model.view, body.word, k=body.k)
        return timed(
            model,
            started,
            {"results": [{"word": w, "score": s} for w, s in results]},
        )

    @app.post("/api/visualize")
    def post_visualize(body: VisualizeBody):
        started = time.perf_counter()
        model = registry.get(body.model)
        request = viz_mod.VizRequest(word=body.word, n=body.n, k=body.k, seed=body.seed)
        plot = viz_mod.build_plot(model.view, request)
        return timed(model, started, plot.to_dict())

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


def serve(config: ServerConfig):
    """Blocking entry point used by the CLI."""
    import uvicorn

    registry = load_registry(config)
    app = create_app(registry, config.cors_origins, config.static_dir)
    host, _, port = config.bind.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
