#!/usr/bin/env python3
"""Capture JSON fixtures for the frontend tests from a seeded backend.

Run from the repo root after installing the Python package:

    python3 frontend/scripts/capture_fixtures.py

The vitest suite replays these instead of spawning the service, so the
fixtures must be regenerated whenever the API shapes change.
"""

import json
import sys
import tempfile
from importlib import resources
from pathlib import Path

from fastapi.testclient import TestClient

from ontowind.categorizer import Document
from ontowind.corpus import dump_documents_jsonl
from ontowind.service import ServiceConfig, create_app

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

CATEGORIZE_DRAFT = {
    "title": "Wake steering control of a wind turbine row",
    "abstractText": "We study wake steering across a wind farm using field sensor data.",
    "keywords": ["wind energy", "control"],
}


def main() -> int:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        tmp_path = Path(tmp)
        ontology_path = tmp_path / "seed.json"
        ontology_path.write_bytes(resources.files("ontowind").joinpath("data/seed.json").read_bytes())
        corpus_path = tmp_path / "corpus.jsonl"
        docs = [
            Document(
                id=f"art-{i:02d}",
                title=f"Wind turbine study {i}",
                abstract_text="wind farm performance",
                source_url=None if i == 3 else f"https://example.org/articles/{i}",
            )
            for i in range(14)
        ]
        corpus_path.write_bytes(dump_documents_jsonl(docs))
        config = ServiceConfig(ontology_path=str(ontology_path), store_path=str(tmp_path / "articles.jsonl"))

        with TestClient(create_app(config)) as client:
            _save("concepts.json", client.get("/api/concepts").json())
            _save(
                "instances_organizations.json",
                client.get(
                    "/api/instances",
                    params={"concept": "WindRelatedOrganization", "transitive": "true"},
                ).json(),
            )
            report = client.post("/api/ingest", json={"sourcePath": str(corpus_path)}).json()
            assert report["stored"] == 14, report
            _save("articles_page0.json", client.get("/api/articles", params={"offset": 0, "limit": 10}).json())
            _save("articles_page1.json", client.get("/api/articles", params={"offset": 10, "limit": 10}).json())
            relevant = client.post("/api/categorize", json=CATEGORIZE_DRAFT).json()
            assert relevant["relevant"] is True, relevant
            _save("categorize_relevant.json", relevant)
            raised = client.post("/api/categorize", json={**CATEGORIZE_DRAFT, "threshold": relevant["score"] + 1}).json()
            assert raised["relevant"] is False, raised
            _save("categorize_raised_threshold.json", raised)
            _save("categorize_empty.json", client.post("/api/categorize", json={}).json())
    print(f"fixtures written to {FIXTURE_DIR}")
    return 0


def _save(name: str, payload) -> None:
    (FIXTURE_DIR / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


if __name__ == "__main__":
    sys.exit(main())
