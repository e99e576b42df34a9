"""HTTP portal service: concepts, instances, categorization, articles.

Read requests are unrestricted; ingestion and ontology reload are
serialized by a single writer lock. The ontology is loaded once at
startup; POST /api/admin/reload re-reads it and swaps the lexicon
atomically. No authentication; binds to localhost by default.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .categorizer import Document, categorize
from .corpus import load_documents
from .errors import CorruptStoreError, OntowindError, UnknownIdError
from .formats import load_ontology
from .matching import build_lexicon
from .model import ConceptTree, Instance, subtree
from .model import instances_of as model_instances_of
from .store import ArticleStore, ingest, record_to_json, result_to_json


@dataclass
class ServiceConfig:
    ontology_path: str
    store_path: str
    host: str = "127.0.0.1"
    port: int = 8000
    threshold: float = 1.0
    languages: tuple[str, ...] = ("EN",)
    labels_only: bool = False
    fold_diacritics: bool = False
    strict_label_weights: bool = False
    static_dir: str | None = None


def load_config(path: str | Path) -> ServiceConfig:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    host, port = "127.0.0.1", 8000
    bind = obj.get("bindAddress")
    if bind:
        host, _, port_text = bind.rpartition(":")
        port = int(port_text)
    return ServiceConfig(
        ontology_path=obj["ontologyPath"],
        store_path=obj["storePath"],
        host=host or "127.0.0.1",
        port=port,
        threshold=obj.get("threshold", 1.0),
        languages=tuple(obj.get("languages", ["EN"])),
        labels_only=obj.get("labelsOnly", False),
        fold_diacritics=obj.get("foldDiacritics", False),
        strict_label_weights=obj.get("strictLabelWeights", False),
        static_dir=obj.get("staticDir"),
    )


@dataclass
class _State:
    config: ServiceConfig
    ontology: object = None
    lexicon: object = None
    store: ArticleStore | None = None
    write_lock: threading.Lock = field(default_factory=threading.Lock)

    def reload_ontology(self) -> int:
        ontology = load_ontology(self.config.ontology_path)
        lexicon = build_lexicon(
            ontology,
            self.config.languages,
            labels_only=self.config.labels_only,
            fold_diacritics=self.config.fold_diacritics,
        )
        # Swap both references under the lock so readers never see a
        # lexicon built from a different ontology than the one served.
        with self.write_lock:
            self.ontology = ontology
            self.lexicon = lexicon
        return len(ontology.concepts)


class CategorizeRequest(BaseModel):
    title: str = ""
    abstractText: str = ""
    keywords: list[str] = []
    threshold: float | None = None


class IngestRequest(BaseModel):
    sourcePath: str


def _tree_to_json(tree: ConceptTree) -> dict:
    return {
        "id": tree.concept.id,
        "label": tree.concept.label,
        "parent": tree.concept.parent,
        "lexicon": [
            {"term": e.term, "language": e.language, "kind": e.kind.value, "weight": e.weight}
            for e in tree.concept.lexicon
        ],
        "children": [_tree_to_json(child) for child in tree.children],
    }


def _instance_to_json(instance: Instance) -> dict:
    return {
        "id": instance.id,
        "conceptId": instance.concept_id,
        "attributes": dict(sorted(instance.attributes.items())),
    }


def create_app(config: ServiceConfig) -> FastAPI:
    state = _State(config=config)
    state.reload_ontology()  # startup errors propagate to the caller
    state.store = ArticleStore(config.store_path)

    app = FastAPI(title="ontowind portal", version="0.1.0")
    app.state.ontowind = state

    @app.exception_handler(RequestValidationError)
    async def _schema_violation(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/api/concepts")
    def get_concepts():
        ontology = state.ontology
        return [_tree_to_json(subtree(ontology, root)) for root in ontology.roots]

    @app.get("/api/concepts/{concept_id}")
    def get_concept(concept_id: str):
        try:
            return _tree_to_json(subtree(state.ontology, concept_id))
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc

    @app.get("/api/instances")
    def get_instances(concept: str = Query(...), transitive: bool = Query(False)):
        try:
            instances = model_instances_of(state.ontology, concept, transitive)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return [_instance_to_json(inst) for inst in instances]

    @app.post("/api/categorize")
    def post_categorize(body: CategorizeRequest):
        threshold = body.threshold if body.threshold is not None else config.threshold
        if threshold <= 0:
            raise HTTPException(status_code=400, detail="threshold must be > 0")
        doc = Document(
            id="",
            title=body.title,
            abstract_text=body.abstractText,
            keywords=tuple(body.keywords),
        )
        result = categorize(
            state.lexicon, doc, threshold, strict_label_weights=config.strict_label_weights
        )
        return result_to_json(result)

    @app.get("/api/articles")
    def get_articles(offset: int = Query(0, ge=0), limit: int = Query(50, ge=1, le=500)):
        records = state.store.page(offset, limit)
        return {
            "items": [record_to_json(r) for r in records],
            "total": len(state.store),
            "offset": offset,
            "limit": limit,
        }

    @app.post("/api/ingest")
    def post_ingest(body: IngestRequest):
        source = Path(body.sourcePath)
        try:
            docs = load_documents(source)
        except FileNotFoundError as exc:
            raise HTTPException(status_code=400, detail=f"unreadable source: {exc}") from exc
        except OntowindError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        try:
            with state.write_lock:
                report = ingest(
                    docs,
                    state.store,
                    state.lexicon,
                    config.threshold,
                    strict_label_weights=config.strict_label_weights,
                )
        except CorruptStoreError as exc:
            raise HTTPException(status_code=503, detail=str(exc)) from exc
        return {
            "scanned": report.scanned,
            "relevant": report.relevant,
            "stored": report.stored,
            "duplicates": report.duplicates,
        }

    @app.post("/api/admin/reload")
    def post_reload():
        try:
            concepts = state.reload_ontology()
        except (OSError, OntowindError) as exc:
            raise HTTPException(status_code=500, detail=f"reload failed, keeping old ontology: {exc}") from exc
        return {"reloaded": True, "concepts": concepts}

    if config.static_dir:
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="portal-ui")

    return app


def serve(config: ServiceConfig) -> None:
    """Run the service until stopped."""
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
