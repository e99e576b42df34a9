"""High-frequency n-gram mining and candidate-concept scaffolding.

The miner is the machine half of semi-automatic ontology bootstrapping:
it ranks frequent n-grams from a corpus; a human curates the resulting
scaffold into real concepts. N-grams whose first or last token is a
stopword are dropped (interior stopwords survive, so "department of
energy" stays).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .categorizer import Document, document_text
from .model import Concept, EntryKind, LexicalEntry, Ontology
from .text import normalize

# Small embedded English list; override with your own set when mining
# other languages or domains.
DEFAULT_STOPWORDS = frozenset(
    """
    a about after all also an and any are as at based be been being between
    both but by can could did do does during each few for from had has have
    he how i if in into is it its may more most no not of on or other our
    over own same she should so some such than that the their then these
    they this those to too under use used using very was we were what when
    where which who will with would you your
    """.split()
)

RECIPROCAL_RANK = "reciprocal-rank"
UNIFORM = "uniform"


@dataclass(frozen=True)
class NgramStats:
    ngram: tuple[str, ...]
    frequency: int
    document_frequency: int


@dataclass(frozen=True)
class ScaffoldEntry:
    candidate_term: str
    suggested_concept_id: str
    frequency: int
    default_weight: float


def extract_ngrams(
    corpus: Sequence[Document],
    n_range: tuple[int, int] = (1, 3),
    *,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
    min_freq: int = 5,
    fold_diacritics: bool = False,
) -> list[NgramStats]:
    """Ranked n-gram stats: frequency desc, then length desc, then lexicographic.

    The ordering is total, so shuffled corpora produce identical output.
    """
    n_min, n_max = n_range
    if not 1 <= n_min <= n_max <= 5:
        raise ValueError(f"n_range must satisfy 1 <= nMin <= nMax <= 5, got {n_range}")
    if min_freq < 1:
        raise ValueError(f"min_freq must be >= 1, got {min_freq}")

    frequency: Counter[tuple[str, ...]] = Counter()
    doc_frequency: Counter[tuple[str, ...]] = Counter()
    for doc in corpus:
        tokens = normalize(document_text(doc), fold_diacritics=fold_diacritics)
        seen: set[tuple[str, ...]] = set()
        for n in range(n_min, n_max + 1):
            for i in range(len(tokens) - n + 1):
                gram = tuple(tokens[i : i + n])
                if gram[0] in stopwords or gram[-1] in stopwords:
                    continue
                frequency[gram] += 1
                seen.add(gram)
        doc_frequency.update(seen)

    stats = [
        NgramStats(gram, count, doc_frequency[gram])
        for gram, count in frequency.items()
        if count >= min_freq
    ]
    stats.sort(key=lambda s: (-s.frequency, -len(s.ngram), s.ngram))
    return stats


def camel_case_id(tokens: Sequence[str]) -> str:
    return "".join(token[:1].upper() + token[1:] for token in tokens)


def scaffold(
    ngrams: Sequence[NgramStats],
    top_k: int,
    *,
    weight_rule: str = RECIPROCAL_RANK,
    uniform_weight: float = 0.5,
) -> list[ScaffoldEntry]:
    """Top-K candidates with draft weights for manual curation.

    ``reciprocal-rank`` assigns 1/rank (rank starting at 1); ``uniform``
    assigns ``uniform_weight`` to all. Candidate ids that collide get a
    numeric suffix.
    """
    if top_k < 1:
        raise ValueError(f"top_k must be >= 1, got {top_k}")
    if weight_rule not in (RECIPROCAL_RANK, UNIFORM):
        raise ValueError(f"unknown weight rule {weight_rule!r}")
    if weight_rule == UNIFORM and not 0.0 <= uniform_weight <= 1.0:
        raise ValueError(f"uniform weight must be in [0, 1], got {uniform_weight}")

    entries: list[ScaffoldEntry] = []
    used_ids: set[str] = set()
    for rank, stats in enumerate(ngrams[:top_k], start=1):
        candidate_id = camel_case_id(stats.ngram)
        if candidate_id in used_ids:
            suffix = 2
            while f"{candidate_id}{suffix}" in used_ids:
                suffix += 1
            candidate_id = f"{candidate_id}{suffix}"
        used_ids.add(candidate_id)
        if weight_rule == RECIPROCAL_RANK:
            weight = 1.0 / rank
        else:
            weight = uniform_weight
        entries.append(
            ScaffoldEntry(
                candidate_term=" ".join(stats.ngram),
                suggested_concept_id=candidate_id,
                frequency=stats.frequency,
                default_weight=weight,
            )
        )
    return entries


def scaffold_to_ontology(entries: Sequence[ScaffoldEntry]) -> Ontology:
    """Candidates as a flat ontology fragment, ready for manual editing."""
    concepts = [
        Concept(
            id=entry.suggested_concept_id,
            label=entry.suggested_concept_id,
            lexicon=(LexicalEntry(entry.candidate_term, "EN", EntryKind.PRIMARY_LABEL, entry.default_weight),),
        )
        for entry in entries
    ]
    return Ontology.build(concepts)
