"""OWL-subset RDF/XML reader and writer.

The supported subset covers what the wind-energy ontology actually uses:
class declarations, single-parent subclass axioms, named individuals with
one class assertion, and annotation/data properties from the fixed table
below. Anything else fails loudly with the offending element named rather
than being silently dropped.

Synonym lists ride in one literal with ";"-separated phrases, paired with a
";"-separated weight list; the pair is zipped into per-entry weights at
parse time, so a length mismatch is a parse-stage validation error.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .canonical import round_weight
from .errors import UnsupportedConstructError, ValidationError, XmlError
from .model import Concept, EntryKind, Instance, LexicalEntry, Ontology, Violation, validate

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
BASE_IRI = "http://example.org/ontowind"

# Annotation properties a concept may carry. Instances additionally keep any
# unknown annotation as an opaque attribute (open-world round-tripping).
_CONCEPT_PROPERTIES = {
    "label",
    "labelEN",
    "labelTR",
    "synonymSet",
    "synonymSetTR",
    "membershipValueLabel",
    "membershipValueLabelTR",
    "membershipValueSynonymSet",
    "membershipValueSynonymSetTR",
}

_DECLARATION_TAGS = {"AnnotationProperty", "DatatypeProperty"}


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _fragment(iri: str) -> str:
    if "#" in iri:
        return iri.rsplit("#", 1)[-1]
    return iri.rstrip("/").rsplit("/", 1)[-1]


def _subject_id(element: ET.Element) -> str:
    about = element.get(f"{{{RDF_NS}}}about")
    if about is not None:
        return _fragment(about)
    rdf_id = element.get(f"{{{RDF_NS}}}ID")
    if rdf_id is not None:
        return rdf_id
    raise UnsupportedConstructError(_local(element.tag), "element without rdf:about or rdf:ID")


def _invalid(subject: str, message: str) -> ValidationError:
    return ValidationError([Violation("owl-data", subject, message)])


def parse_owl(data: bytes) -> Ontology:
    """Parse RDF/XML into a validated ontology."""
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        raise XmlError(f"malformed XML: {exc}") from exc
    if _local(root.tag) != "RDF":
        raise UnsupportedConstructError(_local(root.tag), "document root must be rdf:RDF")

    concepts: list[Concept] = []
    instances: list[Instance] = []
    for element in root:
        local = _local(element.tag)
        if local == "Ontology":
            continue  # header; version annotations carry no model content
        if local in _DECLARATION_TAGS:
            if len(element):
                raise UnsupportedConstructError(local, "property declarations must be empty")
            continue
        if local == "Class":
            concepts.append(_parse_class(element))
        elif local == "NamedIndividual":
            instances.append(_parse_individual(element))
        else:
            raise UnsupportedConstructError(local)

    ontology = Ontology.build(concepts, instances)
    violations = validate(ontology)
    if violations:
        raise ValidationError(violations)
    return ontology


def _parse_class(element: ET.Element) -> Concept:
    cid = _subject_id(element)
    parent: str | None = None
    annotations: dict[str, str] = {}
    for child in element:
        local = _local(child.tag)
        if local == "subClassOf":
            if len(child):
                raise UnsupportedConstructError("subClassOf", "nested class expressions")
            resource = child.get(f"{{{RDF_NS}}}resource")
            if resource is None:
                raise UnsupportedConstructError("subClassOf", "missing rdf:resource")
            if parent is not None:
                raise UnsupportedConstructError("subClassOf", f"multiple parents for {cid}")
            parent = _fragment(resource)
        elif local in _CONCEPT_PROPERTIES:
            if len(child):
                raise UnsupportedConstructError(local, "structured annotation values")
            if local in annotations:
                raise _invalid(cid, f"duplicate {local} annotation")
            annotations[local] = (child.text or "").strip()
        else:
            raise UnsupportedConstructError(local, f"on class {cid}")
    return Concept(
        id=cid,
        label=annotations.get("label", cid),
        parent=parent,
        lexicon=tuple(_entries_from_annotations(cid, annotations)),
    )


def _parse_individual(element: ET.Element) -> Instance:
    iid = _subject_id(element)
    concept_id: str | None = None
    attributes: dict[str, str] = {}
    for child in element:
        local = _local(child.tag)
        if local == "type":
            resource = child.get(f"{{{RDF_NS}}}resource")
            if resource is None:
                raise UnsupportedConstructError("type", "missing rdf:resource")
            if concept_id is not None:
                raise UnsupportedConstructError("type", f"multiple class assertions for {iid}")
            concept_id = _fragment(resource)
        else:
            if len(child):
                raise UnsupportedConstructError(local, f"structured value on individual {iid}")
            if local in attributes:
                raise _invalid(iid, f"duplicate {local} annotation")
            resource = child.get(f"{{{RDF_NS}}}resource")
            attributes[local] = resource if resource is not None else (child.text or "").strip()
    if concept_id is None:
        raise _invalid(iid, "named individual without a class assertion")
    return Instance(id=iid, concept_id=concept_id, attributes=attributes)


def _split_list(value: str) -> list[str]:
    if not value.strip():
        return []
    return [part.strip() for part in value.split(";")]


def _parse_weight(subject: str, prop: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise _invalid(subject, f"{prop} value {raw!r} is not a number") from None


def _entries_from_annotations(cid: str, annotations: dict[str, str]) -> list[LexicalEntry]:
    entries: list[LexicalEntry] = []
    for term_prop, weight_prop, language in (
        ("labelEN", "membershipValueLabel", "EN"),
        ("labelTR", "membershipValueLabelTR", "TR"),
    ):
        term = annotations.get(term_prop)
        weight = annotations.get(weight_prop)
        if (term is None) != (weight is None):
            raise _invalid(cid, f"{term_prop} and {weight_prop} must be given together")
        if term is not None:
            entries.append(
                LexicalEntry(term, language, EntryKind.PRIMARY_LABEL, _parse_weight(cid, weight_prop, weight))
            )
    for terms_prop, weights_prop, language in (
        ("synonymSet", "membershipValueSynonymSet", "EN"),
        ("synonymSetTR", "membershipValueSynonymSetTR", "TR"),
    ):
        terms = _split_list(annotations.get(terms_prop, ""))
        weights = _split_list(annotations.get(weights_prop, ""))
        if len(terms) != len(weights):
            raise _invalid(
                cid,
                f"{terms_prop} has {len(terms)} phrase(s) but {weights_prop} has {len(weights)} weight(s)",
            )
        for term, weight in zip(terms, weights):
            entries.append(LexicalEntry(term, language, EntryKind.SYNONYM, _parse_weight(cid, weights_prop, weight)))
    return entries


def serialize_owl(ontology: Ontology) -> bytes:
    """Write a valid ontology as deterministic RDF/XML."""
    violations = validate(ontology)
    if violations:
        raise ValidationError(violations)

    lines: list[str] = []
    lines.append('<?xml version="1.0" encoding="utf-8"?>')
    lines.append(
        "<rdf:RDF"
        f' xmlns:rdf="{RDF_NS}"'
        f' xmlns:rdfs="{RDFS_NS}"'
        f' xmlns:owl="{OWL_NS}"'
        f' xmlns="{BASE_IRI}#"'
        f' xml:base="{BASE_IRI}">'
    )
    lines.append(f'  <owl:Ontology rdf:about="{BASE_IRI}"/>')

    used_properties = {"label"}
    for concept in ontology.concepts.values():
        used_properties.update(prop for prop, _ in _concept_annotations(concept))
    for instance in ontology.instances.values():
        used_properties.update(instance.attributes)
    for prop in sorted(used_properties):
        lines.append(f'  <owl:AnnotationProperty rdf:about="{BASE_IRI}#{_attr_escape(prop)}"/>')

    for cid in sorted(ontology.concepts):
        concept = ontology.concepts[cid]
        lines.append(f'  <owl:Class rdf:about="{BASE_IRI}#{_attr_escape(cid)}">')
        if concept.parent is not None:
            lines.append(f'    <rdfs:subClassOf rdf:resource="{BASE_IRI}#{_attr_escape(concept.parent)}"/>')
        lines.append(_annotation_line("label", concept.label))
        for prop, value in _concept_annotations(concept):
            lines.append(_annotation_line(prop, value))
        lines.append("  </owl:Class>")

    for iid in sorted(ontology.instances):
        instance = ontology.instances[iid]
        lines.append(f'  <owl:NamedIndividual rdf:about="{BASE_IRI}#{_attr_escape(iid)}">')
        lines.append(f'    <rdf:type rdf:resource="{BASE_IRI}#{_attr_escape(instance.concept_id)}"/>')
        for key in sorted(instance.attributes):
            lines.append(_annotation_line(key, instance.attributes[key]))
        lines.append("  </owl:NamedIndividual>")

    lines.append("</rdf:RDF>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _concept_annotations(concept: Concept) -> list[tuple[str, str]]:
    """Regroup lexical entries into the paired annotation attributes."""
    annotations: list[tuple[str, str]] = []
    synonyms: dict[str, list[LexicalEntry]] = {"EN": [], "TR": []}
    for entry in concept.lexicon:
        if entry.language not in ("EN", "TR"):
            raise _invalid(concept.id, f"OWL rendering supports EN/TR only, got {entry.language!r}")
        if ";" in entry.term or entry.term != entry.term.strip():
            raise _invalid(concept.id, f"term {entry.term!r} cannot ride in a ;-separated literal")
        if entry.kind is EntryKind.SYNONYM:
            synonyms[entry.language].append(entry)
    en_label = concept.primary_label("EN")
    if en_label is not None:
        annotations.append(("labelEN", en_label.term))
        annotations.append(("membershipValueLabel", _format_weight(en_label.weight)))
    tr_label = concept.primary_label("TR")
    if tr_label is not None:
        annotations.append(("labelTR", tr_label.term))
        annotations.append(("membershipValueLabelTR", _format_weight(tr_label.weight)))
    for language, terms_prop, weights_prop in (
        ("EN", "synonymSet", "membershipValueSynonymSet"),
        ("TR", "synonymSetTR", "membershipValueSynonymSetTR"),
    ):
        if synonyms[language]:
            annotations.append((terms_prop, "; ".join(e.term for e in synonyms[language])))
            annotations.append((weights_prop, "; ".join(_format_weight(e.weight) for e in synonyms[language])))
    return annotations


def _format_weight(weight: float) -> str:
    return repr(round_weight(weight))


def _annotation_line(prop: str, value: str) -> str:
    return f"    <{prop}>{escape(value)}</{prop}>"


def _attr_escape(value: str) -> str:
    return quoteattr(value)[1:-1]
