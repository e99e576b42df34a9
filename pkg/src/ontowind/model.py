"""In-memory ontology model: concept taxonomy, lexical entries, instances.

Ontology values are immutable after construction and safe to share across
concurrent readers; "mutation" means building a new value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import UnknownIdError, ValidationError
from .text import normalize


class EntryKind(str, Enum):
    PRIMARY_LABEL = "primaryLabel"
    SYNONYM = "synonym"


@dataclass(frozen=True)
class LexicalEntry:
    """One surface phrase attached to a concept.

    ``weight`` is the fuzzy membership of the phrase in the wind-energy
    domain, a real number in [0, 1].
    """

    term: str
    language: str  # e.g. "EN", "TR"
    kind: EntryKind
    weight: float


def _entry_key(entry: LexicalEntry) -> tuple:
    return (entry.language, entry.kind.value, entry.term, entry.weight)


@dataclass(frozen=True)
class Concept:
    """Node in the taxonomy; ``parent`` is None for the general concepts."""

    id: str
    label: str
    parent: str | None = None
    lexicon: tuple[LexicalEntry, ...] = ()

    def __post_init__(self):
        # Canonical entry order keeps equality independent of authoring order
        # and makes every serialization of the same value deterministic.
        object.__setattr__(self, "lexicon", tuple(sorted(self.lexicon, key=_entry_key)))

    def primary_label(self, language: str) -> LexicalEntry | None:
        for entry in self.lexicon:
            if entry.language == language and entry.kind is EntryKind.PRIMARY_LABEL:
                return entry
        return None


@dataclass(frozen=True)
class Instance:
    """An individual attached to a concept.

    The attribute map is open: besides ``webAddress``, ``twitterAccount``,
    ``country``, and the lexical attribute set, unknown annotation
    attributes are preserved as opaque strings for round-trip fidelity.
    """

    id: str
    concept_id: str
    attributes: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Ontology:
    concepts: Mapping[str, Concept] = field(default_factory=dict)
    instances: Mapping[str, Instance] = field(default_factory=dict)

    @property
    def roots(self) -> list[str]:
        """Ids of the general (parentless) concepts, ordered lexicographically."""
        return sorted(cid for cid, c in self.concepts.items() if c.parent is None)

    @staticmethod
    def build(concepts: Iterable[Concept], instances: Iterable[Instance] = ()) -> "Ontology":
        """Key concepts/instances by id, rejecting duplicates."""
        violations = []
        concept_map: dict[str, Concept] = {}
        for concept in concepts:
            if concept.id in concept_map:
                violations.append(Violation("duplicate-id", concept.id, "duplicate concept id"))
            concept_map[concept.id] = concept
        instance_map: dict[str, Instance] = {}
        for instance in instances:
            if instance.id in instance_map:
                violations.append(Violation("duplicate-id", instance.id, "duplicate instance id"))
            instance_map[instance.id] = instance
        if violations:
            raise ValidationError(violations)
        return Ontology(concepts=concept_map, instances=instance_map)


@dataclass(frozen=True)
class Violation:
    """One broken invariant: the rule, the offending id, and a description."""

    rule: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class ConceptTree:
    concept: Concept
    children: tuple["ConceptTree", ...] = ()

    def ids(self) -> list[str]:
        """All concept ids in the tree, preorder."""
        out = [self.concept.id]
        for child in self.children:
            out.extend(child.ids())
        return out


_ID_RE = re.compile(r"^\S+$")
_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")


def validate(ontology: Ontology) -> list[Violation]:
    """Check every model invariant; an empty list means the ontology is valid.

    Violations are data, not failures: callers decide whether to raise.
    """
    violations: list[Violation] = []

    for key, concept in ontology.concepts.items():
        if key != concept.id:
            violations.append(Violation("key-mismatch", key, f"map key differs from concept id {concept.id!r}"))
        if not _ID_RE.match(concept.id or ""):
            violations.append(Violation("bad-id", concept.id, "concept id must be a non-empty token without whitespace"))
        if not concept.label:
            violations.append(Violation("empty-label", concept.id, "concept label must be non-empty"))
        if concept.parent is not None and concept.parent not in ontology.concepts:
            violations.append(Violation("dangling-parent", concept.id, f"parent {concept.parent!r} does not exist"))
        seen_primary: set[str] = set()
        for entry in concept.lexicon:
            if not 0.0 <= entry.weight <= 1.0:
                violations.append(
                    Violation("weight-range", concept.id, f"weight {entry.weight!r} of {entry.term!r} outside [0, 1]")
                )
            if not normalize(entry.term):
                violations.append(Violation("empty-term", concept.id, f"term {entry.term!r} normalizes to nothing"))
            if entry.kind is EntryKind.PRIMARY_LABEL:
                if entry.language in seen_primary:
                    violations.append(
                        Violation("duplicate-primary-label", concept.id, f"multiple primary labels for {entry.language}")
                    )
                seen_primary.add(entry.language)

    violations.extend(_find_cycles(ontology))

    for key, instance in ontology.instances.items():
        if key != instance.id:
            violations.append(Violation("key-mismatch", key, f"map key differs from instance id {instance.id!r}"))
        if not _ID_RE.match(instance.id or ""):
            violations.append(Violation("bad-id", instance.id, "instance id must be a non-empty token without whitespace"))
        if instance.concept_id not in ontology.concepts:
            violations.append(
                Violation("dangling-concept", instance.id, f"concept {instance.concept_id!r} does not exist")
            )
        country = instance.attributes.get("country")
        if country is not None and not _COUNTRY_RE.match(country):
            violations.append(
                Violation("bad-country", instance.id, f"country {country!r} is not 2 uppercase ASCII letters")
            )

    return violations


def _find_cycles(ontology: Ontology) -> list[Violation]:
    # Walk parent links with memoized verdicts; every concept on or leading
    # into a cycle is reported exactly once.
    verdicts: dict[str, bool] = {}  # id -> reaches a cycle
    for start in ontology.concepts:
        if start in verdicts:
            continue
        path: list[str] = []
        position: dict[str, int] = {}
        cid: str | None = start
        while True:
            if cid is None or cid not in ontology.concepts:
                cyclic = False  # reached a root (dangling parents are reported separately)
                break
            if cid in verdicts:
                cyclic = verdicts[cid]
                break
            if cid in position:
                for node in path[position[cid] :]:
                    verdicts[node] = True
                path = path[: position[cid]]
                cyclic = True
                break
            position[cid] = len(path)
            path.append(cid)
            cid = ontology.concepts[cid].parent
        for node in path:
            verdicts[node] = cyclic
    return [
        Violation("cycle", cid, "parent links form or reach a cycle")
        for cid, cyclic in verdicts.items()
        if cyclic
    ]


def _children_index(ontology: Ontology) -> dict[str, list[str]]:
    children: dict[str, list[str]] = {}
    for cid, concept in ontology.concepts.items():
        if concept.parent is not None:
            children.setdefault(concept.parent, []).append(cid)
    for ids in children.values():
        ids.sort()
    return children


def subtree(ontology: Ontology, root: str) -> ConceptTree:
    """Tree of ``root`` and all transitive children, children ordered by id."""
    if root not in ontology.concepts:
        raise UnknownIdError(root)
    children = _children_index(ontology)

    def build(cid: str, seen: frozenset[str]) -> ConceptTree:
        if cid in seen:  # cycle guard; unreachable on validated data
            raise ValidationError([Violation("cycle", cid, "parent links form a cycle")])
        return ConceptTree(
            concept=ontology.concepts[cid],
            children=tuple(build(child, seen | {cid}) for child in children.get(cid, ())),
        )

    return build(root, frozenset())


def instances_of(ontology: Ontology, concept: str, transitive: bool = False) -> list[Instance]:
    """Instances whose immediate type is ``concept`` (or any descendant when
    ``transitive``), ordered by instance id."""
    if concept not in ontology.concepts:
        raise UnknownIdError(concept)
    if transitive:
        wanted = set(subtree(ontology, concept).ids())
    else:
        wanted = {concept}
    hits = [inst for inst in ontology.instances.values() if inst.concept_id in wanted]
    hits.sort(key=lambda inst: inst.id)
    return hits
