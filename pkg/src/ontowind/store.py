"""Append-only JSON-lines article store and the ingestion pipeline.

One ArticleRecord per line; records are appended with a single atomic
write. On startup a trailing partial line (crash leftover) is truncated
away; a parse failure anywhere earlier marks the store corrupted, after
which reads serve the valid prefix and writes are refused until the file
is repaired by hand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Sequence

from .categorizer import CategorizationResult, ConceptContribution, Document, categorize
from .errors import CorruptStoreError, SchemaError
from .matching import Lexicon


@dataclass(frozen=True)
class ArticleRecord:
    document_id: str
    title: str
    source_url: str | None
    ingested_at: str  # UTC, seconds precision, e.g. "2026-08-10T12:00:00Z"
    result: CategorizationResult


def utc_now_seconds() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def result_to_json(result: CategorizationResult) -> dict:
    return {
        "documentId": result.document_id,
        "matchedConcepts": [
            {"conceptId": c.concept_id, "weight": c.weight, "matchCount": c.match_count}
            for c in result.matched_concepts
        ],
        "score": result.score,
        "threshold": result.threshold,
        "relevant": result.relevant,
    }


def result_from_json(obj: dict) -> CategorizationResult:
    return CategorizationResult(
        document_id=obj["documentId"],
        matched_concepts=tuple(
            ConceptContribution(c["conceptId"], c["weight"], c["matchCount"])
            for c in obj["matchedConcepts"]
        ),
        score=obj["score"],
        threshold=obj["threshold"],
        relevant=obj["relevant"],
    )


def record_to_json(record: ArticleRecord) -> dict:
    return {
        "documentId": record.document_id,
        "title": record.title,
        "sourceUrl": record.source_url,
        "ingestedAt": record.ingested_at,
        "result": result_to_json(record.result),
    }


def record_from_json(obj: dict) -> ArticleRecord:
    try:
        return ArticleRecord(
            document_id=obj["documentId"],
            title=obj["title"],
            source_url=obj.get("sourceUrl"),
            ingested_at=obj["ingestedAt"],
            result=result_from_json(obj["result"]),
        )
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed article record: {exc}") from exc


class ArticleStore:
    """Persisted sequence of relevant articles, unique by document id."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._records: list[ArticleRecord] = []
        self._ids: set[str] = set()
        self._corrupt: str | None = None  # description of the first bad line
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        raw = self.path.read_bytes()
        lines = raw.split(b"\n")
        trailing = lines.pop() if lines else b""  # content after the last newline
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                record = record_from_json(json.loads(line.decode("utf-8")))
            except (UnicodeDecodeError, json.JSONDecodeError, SchemaError):
                self._corrupt = f"line {lineno} failed to parse"
                return
            if record.document_id in self._ids:
                self._corrupt = f"line {lineno} repeats document id {record.document_id!r}"
                return
            self._records.append(record)
            self._ids.add(record.document_id)
        if trailing.strip():
            # Partial final line without newline: a crashed append. Drop it.
            with self.path.open("r+b") as fh:
                fh.truncate(len(raw) - len(trailing))

    @property
    def corrupt(self) -> str | None:
        return self._corrupt

    def _require_writable(self) -> None:
        if self._corrupt is not None:
            raise CorruptStoreError(f"store {self.path} is corrupted ({self._corrupt}); writes refused")

    def append(self, record: ArticleRecord) -> bool:
        """Persist a record; returns False (a no-op) for a known document id."""
        self._require_writable()
        if not record.result.relevant:
            raise ValueError(f"only relevant results are stored, got {record.document_id!r}")
        if record.document_id in self._ids:
            return False
        line = json.dumps(record_to_json(record), ensure_ascii=False, sort_keys=True) + "\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("ab") as fh:
            fh.write(line.encode("utf-8"))  # single write keeps lines atomic
        self._records.append(record)
        self._ids.add(record.document_id)
        return True

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, document_id: str) -> bool:
        return document_id in self._ids

    def records(self) -> list[ArticleRecord]:
        return list(self._records)

    def page(self, offset: int = 0, limit: int = 50) -> list[ArticleRecord]:
        if offset < 0 or limit < 0:
            raise ValueError("offset and limit must be >= 0")
        return self._records[offset : offset + limit]


@dataclass(frozen=True)
class IngestReport:
    scanned: int
    relevant: int
    stored: int
    duplicates: int


def ingest(
    docs: Sequence[Document],
    store: ArticleStore,
    lexicon: Lexicon,
    threshold: float = 1.0,
    *,
    strict_label_weights: bool = False,
    clock: Callable[[], str] = utc_now_seconds,
) -> IngestReport:
    """Categorize every document and append the relevant ones to the store."""
    store._require_writable()
    scanned = relevant = stored = duplicates = 0
    for doc in docs:
        scanned += 1
        result = categorize(lexicon, doc, threshold, strict_label_weights=strict_label_weights)
        if not result.relevant:
            continue
        relevant += 1
        record = ArticleRecord(
            document_id=doc.id,
            title=doc.title,
            source_url=doc.source_url,
            ingested_at=clock(),
            result=result,
        )
        if store.append(record):
            stored += 1
        else:
            duplicates += 1
    return IngestReport(scanned=scanned, relevant=relevant, stored=stored, duplicates=duplicates)
