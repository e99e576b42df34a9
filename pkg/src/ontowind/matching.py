"""Searchable lexicon over an ontology and concept-mention matching.

Matching is greedy leftmost-longest over the normalized token stream and
never overlaps: "wind power plant" is one mention, not also "wind power".
Token boundaries are respected, so "windmill" never matches an entry
"wind". Ties between equally long entries at the same position are broken
by (concept id, kind, language, term); the key is deliberately
weight-independent so that raising a weight can change a score but never
which entry matches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .model import EntryKind, Ontology
from .text import normalize


@dataclass(frozen=True)
class LexiconEntry:
    tokens: tuple[str, ...]
    concept_id: str
    term: str  # original surface form, for explanations
    language: str
    kind: EntryKind
    weight: float


def entry_precedence(entry: LexiconEntry) -> tuple:
    """Tie-break key for same-length matches; must not involve the weight."""
    return (entry.concept_id, entry.kind.value, entry.language, entry.term)


@dataclass
class _Node:
    children: dict[str, "_Node"] = field(default_factory=dict)
    entry: LexiconEntry | None = None


class Lexicon:
    """Immutable multi-pattern index over token sequences."""

    def __init__(
        self,
        entries: Iterable[LexiconEntry],
        *,
        fold_diacritics: bool = False,
        primary_label_weights: dict[str, float] | None = None,
    ):
        self.entries = tuple(entries)
        self.fold_diacritics = fold_diacritics
        # EN primary-label weight per concept, for the strict weighting mode.
        self.primary_label_weights = dict(primary_label_weights or {})
        self._root = _Node()
        for entry in self.entries:
            if not entry.tokens:
                raise ValueError(f"lexicon entry {entry.term!r} has no tokens")
            node = self._root
            for token in entry.tokens:
                node = node.children.setdefault(token, _Node())
            if node.entry is None or entry_precedence(entry) < entry_precedence(node.entry):
                node.entry = entry

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ConceptMatch:
    concept_id: str
    entry: LexiconEntry
    span: tuple[int, int]  # inclusive token indices into the normalized stream


def build_lexicon(
    ontology: Ontology,
    languages: Iterable[str] = ("EN",),
    *,
    labels_only: bool = False,
    fold_diacritics: bool = False,
) -> Lexicon:
    """One lexicon entry per lexical entry in the requested languages.

    Callers are expected to pass a validated ontology; terms are normalized
    with the same tokenizer the matcher uses on text.
    """
    wanted = set(languages)
    entries = []
    primary_label_weights: dict[str, float] = {}
    for cid in sorted(ontology.concepts):
        concept = ontology.concepts[cid]
        for lexical in concept.lexicon:
            if lexical.kind is EntryKind.PRIMARY_LABEL and lexical.language == "EN":
                primary_label_weights[cid] = lexical.weight
            if lexical.language not in wanted:
                continue
            if labels_only and lexical.kind is not EntryKind.PRIMARY_LABEL:
                continue
            entries.append(
                LexiconEntry(
                    tokens=tuple(normalize(lexical.term, fold_diacritics=fold_diacritics)),
                    concept_id=cid,
                    term=lexical.term,
                    language=lexical.language,
                    kind=lexical.kind,
                    weight=lexical.weight,
                )
            )
    return Lexicon(entries, fold_diacritics=fold_diacritics, primary_label_weights=primary_label_weights)


def find_matches(lexicon: Lexicon, text: str) -> list[ConceptMatch]:
    """All non-overlapping concept mentions in ``text``, ordered by position."""
    tokens = normalize(text, fold_diacritics=lexicon.fold_diacritics)
    return match_tokens(lexicon, tokens)


def match_tokens(lexicon: Lexicon, tokens: Sequence[str]) -> list[ConceptMatch]:
    matches: list[ConceptMatch] = []
    n = len(tokens)
    i = 0
    root = lexicon._root
    while i < n:
        node = root
        best: LexiconEntry | None = None
        best_end = i  # exclusive
        j = i
        while j < n:
            node = node.children.get(tokens[j])
            if node is None:
                break
            j += 1
            if node.entry is not None:
                best = node.entry
                best_end = j
        if best is not None:
            matches.append(ConceptMatch(best.concept_id, best, (i, best_end - 1)))
            i = best_end
        else:
            i += 1
    return matches
