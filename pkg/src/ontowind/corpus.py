"""Document corpus I/O.

Two interchange forms: a directory of UTF-8 plain-text files (one document
per file, first non-blank line as title) and JSON-lines records of
``{id, title, abstractText, keywords}`` with optional ``body``,
``sourceUrl``, and ``label`` fields.
"""

from __future__ import annotations

import json
from pathlib import Path

from .categorizer import Document
from .errors import DuplicateDocumentIdError, JsonError, LabelMismatchError, SchemaError


def load_documents(path: str | Path) -> list[Document]:
    """Load a corpus from a text directory or a .jsonl file."""
    docs, _ = _load(path)
    return docs


def load_labeled_corpus(path: str | Path):
    """Load a JSON-lines corpus where every record carries a boolean label."""
    from .evaluation import LabeledCorpus

    docs, labels = _load(path)
    missing = [doc.id for doc in docs if doc.id not in labels]
    if missing:
        raise LabelMismatchError(f"documents without label: {missing[:5]}")
    return LabeledCorpus(documents=tuple(docs), labels=labels)


def _load(path: str | Path) -> tuple[list[Document], dict[str, bool]]:
    path = Path(path)
    if path.is_dir():
        return _load_text_dir(path), {}
    # Missing files surface as the usual I/O error.
    data = path.read_text(encoding="utf-8")
    docs: list[Document] = []
    labels: dict[str, bool] = {}
    seen: set[str] = set()
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise JsonError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
        doc, label = _document_from_record(record, f"{path}:{lineno}")
        if doc.id in seen:
            raise DuplicateDocumentIdError(doc.id)
        seen.add(doc.id)
        docs.append(doc)
        if label is not None:
            labels[doc.id] = label
    return docs, labels


def _load_text_dir(path: Path) -> list[Document]:
    docs = []
    for file in sorted(path.glob("*.txt")):
        text = file.read_text(encoding="utf-8")
        lines = text.splitlines()
        title = ""
        rest_start = 0
        for i, line in enumerate(lines):
            if line.strip():
                title = line.strip()
                rest_start = i + 1
                break
        docs.append(
            Document(
                id=file.stem,
                title=title,
                abstract_text="\n".join(lines[rest_start:]).strip(),
            )
        )
    return docs


def _document_from_record(record, where: str) -> tuple[Document, bool | None]:
    if not isinstance(record, dict):
        raise SchemaError(f"{where}: corpus records must be objects")
    doc_id = record.get("id")
    if not isinstance(doc_id, str) or not doc_id:
        raise SchemaError(f"{where}: missing or empty document id")
    keywords = record.get("keywords", [])
    if not isinstance(keywords, list) or not all(isinstance(k, str) for k in keywords):
        raise SchemaError(f"{where}: keywords must be an array of strings")
    label = record.get("label")
    if label is not None and not isinstance(label, bool):
        raise SchemaError(f"{where}: label must be a boolean")
    for key in ("title", "abstractText", "body", "sourceUrl"):
        value = record.get(key)
        if value is not None and not isinstance(value, str):
            raise SchemaError(f"{where}: {key} must be a string")
    doc = Document(
        id=doc_id,
        title=record.get("title", ""),
        abstract_text=record.get("abstractText", ""),
        keywords=tuple(keywords),
        body=record.get("body"),
        source_url=record.get("sourceUrl"),
    )
    return doc, label


def document_to_record(doc: Document, label: bool | None = None) -> dict:
    record = {
        "id": doc.id,
        "title": doc.title,
        "abstractText": doc.abstract_text,
        "keywords": list(doc.keywords),
    }
    if doc.body is not None:
        record["body"] = doc.body
    if doc.source_url is not None:
        record["sourceUrl"] = doc.source_url
    if label is not None:
        record["label"] = label
    return record


def dump_documents_jsonl(docs, labels: dict[str, bool] | None = None) -> bytes:
    lines = [
        json.dumps(document_to_record(doc, (labels or {}).get(doc.id)), ensure_ascii=False, sort_keys=True)
        for doc in docs
    ]
    return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")
