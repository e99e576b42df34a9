"""Canonical JSON interchange format.

Serialization is deterministic: the same ontology value always produces
byte-identical output (sorted keys, concepts and instances ordered by id,
weights rounded to at most 6 fractional digits in their shortest decimal
form). Parsing is strict about the schema so that golden files stay honest.
"""

from __future__ import annotations

import json

from .errors import JsonError, SchemaError, ValidationError
from .model import Concept, EntryKind, Instance, LexicalEntry, Ontology, validate

FORMAT_VERSION = "1"


def round_weight(weight: float) -> float:
    """Weights carry at most 6 fractional digits on the wire."""
    return round(weight, 6)


def serialize_canonical(ontology: Ontology) -> bytes:
    """Encode a valid ontology as canonical UTF-8 JSON (LF line endings)."""
    violations = validate(ontology)
    if violations:
        raise ValidationError(violations)
    document = {
        "formatVersion": FORMAT_VERSION,
        "concepts": [_concept_to_json(ontology.concepts[cid]) for cid in sorted(ontology.concepts)],
        "instances": [_instance_to_json(ontology.instances[iid]) for iid in sorted(ontology.instances)],
    }
    return (json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode("utf-8")


def parse_canonical(data: bytes) -> Ontology:
    """Inverse of :func:`serialize_canonical`; returns a validated ontology."""
    try:
        obj = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise JsonError(f"not valid UTF-8 JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SchemaError("top-level value must be an object")
    _check_keys(obj, {"formatVersion", "concepts", "instances"}, "document")
    version = obj.get("formatVersion")
    if version != FORMAT_VERSION:
        raise SchemaError(f"unknown formatVersion {version!r} (expected {FORMAT_VERSION!r})")
    concepts = [_concept_from_json(item) for item in _require_list(obj, "concepts")]
    instances = [_instance_from_json(item) for item in _require_list(obj, "instances")]
    ontology = Ontology.build(concepts, instances)
    violations = validate(ontology)
    if violations:
        raise ValidationError(violations)
    return ontology


def _concept_to_json(concept: Concept) -> dict:
    return {
        "id": concept.id,
        "label": concept.label,
        "parent": concept.parent,
        "lexicon": [
            {
                "term": entry.term,
                "language": entry.language,
                "kind": entry.kind.value,
                "weight": round_weight(entry.weight),
            }
            for entry in concept.lexicon
        ],
    }


def _instance_to_json(instance: Instance) -> dict:
    return {
        "id": instance.id,
        "conceptId": instance.concept_id,
        "attributes": dict(sorted(instance.attributes.items())),
    }


def _require_list(obj: dict, key: str) -> list:
    value = obj.get(key)
    if not isinstance(value, list):
        raise SchemaError(f"missing or non-array field {key!r}")
    return value


def _require_str(obj: dict, key: str, where: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str):
        raise SchemaError(f"missing or non-string field {key!r} in {where}")
    return value


def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"unknown field(s) {sorted(unknown)} in {where}")


def _concept_from_json(item) -> Concept:
    if not isinstance(item, dict):
        raise SchemaError("concept entries must be objects")
    _check_keys(item, {"id", "label", "parent", "lexicon"}, "concept")
    cid = _require_str(item, "id", "concept")
    label = _require_str(item, "label", "concept")
    parent = item.get("parent")
    if parent is not None and not isinstance(parent, str):
        raise SchemaError(f"non-string parent in concept {cid!r}")
    raw_lexicon = item.get("lexicon", [])
    if not isinstance(raw_lexicon, list):
        raise SchemaError(f"non-array lexicon in concept {cid!r}")
    entries = []
    for raw in raw_lexicon:
        if not isinstance(raw, dict):
            raise SchemaError(f"lexicon entries of {cid!r} must be objects")
        _check_keys(raw, {"term", "language", "kind", "weight"}, f"lexicon entry of {cid!r}")
        kind_value = _require_str(raw, "kind", f"lexicon entry of {cid!r}")
        try:
            kind = EntryKind(kind_value)
        except ValueError:
            raise SchemaError(f"unknown lexicon kind {kind_value!r} in concept {cid!r}") from None
        weight = raw.get("weight")
        if not isinstance(weight, (int, float)) or isinstance(weight, bool):
            raise SchemaError(f"non-numeric weight in concept {cid!r}")
        entries.append(
            LexicalEntry(
                term=_require_str(raw, "term", f"lexicon entry of {cid!r}"),
                language=_require_str(raw, "language", f"lexicon entry of {cid!r}"),
                kind=kind,
                weight=float(weight),
            )
        )
    return Concept(id=cid, label=label, parent=parent, lexicon=tuple(entries))


def _instance_from_json(item) -> Instance:
    if not isinstance(item, dict):
        raise SchemaError("instance entries must be objects")
    _check_keys(item, {"id", "conceptId", "attributes"}, "instance")
    iid = _require_str(item, "id", "instance")
    concept_id = _require_str(item, "conceptId", "instance")
    attributes = item.get("attributes", {})
    if not isinstance(attributes, dict):
        raise SchemaError(f"non-object attributes in instance {iid!r}")
    for key, value in attributes.items():
        if not isinstance(value, str):
            raise SchemaError(f"non-string attribute {key!r} in instance {iid!r}")
    return Instance(id=iid, concept_id=concept_id, attributes=dict(attributes))
