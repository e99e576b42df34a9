"""Score documents against the ontology lexicon and decide relevance.

A text counts as wind-energy-relevant when it mentions at least one
concept and the weights of the distinct mentioned concepts sum to at least
the threshold (default 1.0, inclusive). Concepts count once no matter how
often they occur; when several entries of one concept match, the largest
matched weight contributes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DuplicateDocumentIdError
from .matching import Lexicon, find_matches


@dataclass(frozen=True)
class Document:
    id: str
    title: str = ""
    abstract_text: str = ""
    keywords: tuple[str, ...] = ()
    body: str | None = None
    source_url: str | None = None


def document_text(doc: Document) -> str:
    """The categorized text: title, abstract, keywords, space-joined."""
    return " ".join([doc.title, doc.abstract_text, *doc.keywords])


@dataclass(frozen=True)
class ConceptContribution:
    concept_id: str
    weight: float
    match_count: int


@dataclass(frozen=True)
class CategorizationResult:
    document_id: str
    matched_concepts: tuple[ConceptContribution, ...]
    score: float
    threshold: float
    relevant: bool


def reciprocal_rank_weight(n: int) -> float:
    """Fuzzy membership from a rank in a disambiguation/ranked list: exactly 1/n."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    return 1.0 / n


def categorize(
    lexicon: Lexicon,
    doc: Document,
    threshold: float = 1.0,
    *,
    strict_label_weights: bool = False,
) -> CategorizationResult:
    """Categorize one document.

    With ``strict_label_weights`` every matched concept contributes its EN
    primary-label weight regardless of which entry matched (falling back to
    the matched weight when the concept has no EN primary label).
    """
    if threshold <= 0:
        raise ValueError(f"threshold must be > 0, got {threshold}")
    matches = find_matches(lexicon, document_text(doc))
    max_weight: dict[str, float] = {}
    counts: dict[str, int] = {}
    for match in matches:
        cid = match.concept_id
        counts[cid] = counts.get(cid, 0) + 1
        weight = match.entry.weight
        if cid not in max_weight or weight > max_weight[cid]:
            max_weight[cid] = weight
    if strict_label_weights:
        for cid in max_weight:
            max_weight[cid] = lexicon.primary_label_weights.get(cid, max_weight[cid])
    contributions = tuple(
        ConceptContribution(cid, max_weight[cid], counts[cid]) for cid in sorted(max_weight)
    )
    # fsum: the score is the correctly rounded sum, so it cannot depend on
    # summation order; threshold comparisons at the exact boundary stay stable.
    score = math.fsum(c.weight for c in contributions)
    return CategorizationResult(
        document_id=doc.id,
        matched_concepts=contributions,
        score=score,
        threshold=threshold,
        relevant=bool(contributions) and score >= threshold,
    )


def categorize_corpus(
    lexicon: Lexicon,
    docs: list[Document],
    threshold: float = 1.0,
    *,
    strict_label_weights: bool = False,
) -> list[CategorizationResult]:
    """Element-wise :func:`categorize`, order preserved; doc ids must be unique."""
    seen: set[str] = set()
    for doc in docs:
        if doc.id in seen:
            raise DuplicateDocumentIdError(doc.id)
        seen.add(doc.id)
    return [
        categorize(lexicon, doc, threshold, strict_label_weights=strict_label_weights) for doc in docs
    ]
