import json

import pytest

from ontowind import (
    ArticleRecord,
    ArticleStore,
    CategorizationResult,
    ConceptContribution,
    CorruptStoreError,
    Document,
    ingest,
)
from ontowind.store import record_from_json, record_to_json


def _result(doc_id, relevant=True, score=1.0):
    return CategorizationResult(
        document_id=doc_id,
        matched_concepts=(ConceptContribution("WindTurbine", score, 1),) if relevant else (),
        score=score if relevant else 0.0,
        threshold=1.0,
        relevant=relevant,
    )


def _record(doc_id, when="2026-08-10T12:00:00Z"):
    return ArticleRecord(
        document_id=doc_id,
        title=f"article {doc_id}",
        source_url=f"https://example.org/{doc_id}",
        ingested_at=when,
        result=_result(doc_id),
    )


class TestArticleStore:
    def test_append_and_reload(self, tmp_path):
        path = tmp_path / "articles.jsonl"
        store = ArticleStore(path)
        assert store.append(_record("a")) is True
        assert store.append(_record("b")) is True
        reopened = ArticleStore(path)
        assert reopened.records() == store.records()
        assert len(reopened) == 2

    def test_duplicate_append_is_noop(self, tmp_path):
        store = ArticleStore(tmp_path / "s.jsonl")
        assert store.append(_record("a")) is True
        assert store.append(_record("a")) is False
        assert len(store) == 1

    def test_only_relevant_records_stored(self, tmp_path):
        store = ArticleStore(tmp_path / "s.jsonl")
        bad = ArticleRecord("x", "x", None, "2026-08-10T12:00:00Z", _result("x", relevant=False))
        with pytest.raises(ValueError):
            store.append(bad)

    def test_partial_trailing_line_truncated_on_recovery(self, tmp_path):
        path = tmp_path / "s.jsonl"
        store = ArticleStore(path)
        store.append(_record("a"))
        with path.open("ab") as fh:
            fh.write(b'{"documentId": "half')  # crash mid-append, no newline
        recovered = ArticleStore(path)
        assert recovered.corrupt is None
        assert [r.document_id for r in recovered.records()] == ["a"]
        # The partial tail is physically gone and appends work again.
        assert recovered.append(_record("b")) is True
        lines = path.read_bytes().splitlines()
        assert len(lines) == 2

    def test_corrupt_interior_line_refuses_writes(self, tmp_path):
        path = tmp_path / "s.jsonl"
        store = ArticleStore(path)
        store.append(_record("a"))
        store.append(_record("b"))
        raw = path.read_bytes().splitlines(keepends=True)
        path.write_bytes(raw[0] + b"not json at all\n" + raw[1])
        broken = ArticleStore(path)
        assert broken.corrupt is not None
        assert [r.document_id for r in broken.records()] == ["a"]  # valid prefix served
        with pytest.raises(CorruptStoreError):
            broken.append(_record("c"))

    def test_page(self, tmp_path):
        store = ArticleStore(tmp_path / "s.jsonl")
        for i in range(14):
            store.append(_record(f"d{i:02d}"))
        assert [r.document_id for r in store.page(0, 10)] == [f"d{i:02d}" for i in range(10)]
        assert [r.document_id for r in store.page(10, 10)] == [f"d{i:02d}" for i in range(10, 14)]
        assert store.page(20, 10) == []
        with pytest.raises(ValueError):
            store.page(-1, 10)

    def test_record_json_round_trip(self):
        record = _record("a")
        assert record_from_json(json.loads(json.dumps(record_to_json(record)))) == record


class TestIngest:
    def _docs(self):
        return [
            Document(id="r1", title="wind turbine blades", source_url="https://example.org/r1"),
            Document(id="r2", title="wind farm sensor audits"),
            Document(id="n1", title="solar inverter pricing"),
            Document(id="n2", title="sensor calibration"),
        ]

    def test_counts_and_persistence(self, tmp_path, seed_lexicon_en):
        store = ArticleStore(tmp_path / "s.jsonl")
        report = ingest(self._docs(), store, seed_lexicon_en)
        assert report.scanned == 4
        assert report.relevant == 2  # the two wind docs clear the threshold
        assert report.stored == 2
        assert report.duplicates == 0
        assert [r.document_id for r in store.records()] == ["r1", "r2"]
        assert store.records()[0].source_url == "https://example.org/r1"

    def test_reingest_is_idempotent(self, tmp_path, seed_lexicon_en):
        store = ArticleStore(tmp_path / "s.jsonl")
        first = ingest(self._docs(), store, seed_lexicon_en)
        second = ingest(self._docs(), store, seed_lexicon_en)
        assert second.duplicates == first.stored
        assert second.stored == 0
        assert len(store) == first.stored

    def test_empty_source(self, tmp_path, seed_lexicon_en):
        store = ArticleStore(tmp_path / "s.jsonl")
        report = ingest([], store, seed_lexicon_en)
        assert (report.scanned, report.relevant, report.stored, report.duplicates) == (0, 0, 0, 0)

    def test_every_stored_record_is_relevant_and_above_threshold(self, tmp_path, seed_lexicon_en):
        store = ArticleStore(tmp_path / "s.jsonl")
        ingest(self._docs(), store, seed_lexicon_en, threshold=1.0)
        for record in store.records():
            assert record.result.relevant is True
            assert record.result.score >= record.result.threshold

    def test_injectable_clock(self, tmp_path, seed_lexicon_en):
        store = ArticleStore(tmp_path / "s.jsonl")
        ingest(self._docs(), store, seed_lexicon_en, clock=lambda: "2026-01-02T03:04:05Z")
        assert {r.ingested_at for r in store.records()} == {"2026-01-02T03:04:05Z"}

    def test_91_document_source_with_14_relevant(self, tmp_path, seed_lexicon_en):
        # Mirrors a 91-article source where the categorizer flags 14 docs.
        docs = [
            Document(id=f"d{i:02d}", title="wind turbine wakes" if i < 14 else "carbon pricing")
            for i in range(91)
        ]
        store = ArticleStore(tmp_path / "s.jsonl")
        report = ingest(docs, store, seed_lexicon_en)
        assert (report.scanned, report.relevant, report.stored, report.duplicates) == (91, 14, 14, 0)
