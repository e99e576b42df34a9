"""Ontology file loading/saving dispatched on file extension."""

from __future__ import annotations

from pathlib import Path

from .canonical import parse_canonical, serialize_canonical
from .model import Ontology
from .owl import parse_owl, serialize_owl

_OWL_SUFFIXES = {".owl", ".rdf", ".xml"}
_JSON_SUFFIXES = {".json"}


def ontology_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in _OWL_SUFFIXES:
        return "owl"
    if suffix in _JSON_SUFFIXES:
        return "canonical"
    raise ValueError(f"cannot tell ontology format from extension {suffix!r} (use .owl/.rdf/.xml or .json)")


def load_ontology(path: str | Path) -> Ontology:
    data = Path(path).read_bytes()
    if ontology_format(path) == "owl":
        return parse_owl(data)
    return parse_canonical(data)


def save_ontology(ontology: Ontology, path: str | Path) -> None:
    if ontology_format(path) == "owl":
        data = serialize_owl(ontology)
    else:
        data = serialize_canonical(ontology)
    Path(path).write_bytes(data)
