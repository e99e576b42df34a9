"""Synthetic labeled corpus generator.

Builds corpora with controlled concept densities by planting lexicon terms
into neutral filler text. Labels are computed from the final text with the
standard decision rule (so a planted document whose accidental extra
matches push it over the threshold is labeled accordingly); ``label_noise``
flips a fraction of labels to make confusion matrices non-trivial.
Deterministic for a given random generator.
"""

from __future__ import annotations

import random

from .categorizer import Document, categorize
from .evaluation import LabeledCorpus
from .matching import Lexicon, build_lexicon
from .model import Ontology

# Neutral academic filler; tokens colliding with the lexicon are removed
# at generation time so fillers never score.
FILLER_WORDS = (
    "study analysis method results proposed approach novel framework section "
    "experiment evaluation discussion literature review dataset baseline "
    "significant improvement table figure equation parameter estimation "
    "optimization algorithm implementation comparison observed measured "
    "reported previous recent existing general specific overall detailed "
    "theoretical practical empirical numerical simulation case region city "
    "market policy economic industrial residential thermal solar biomass "
    "hydrogen storage battery grid demand supply efficiency consumption "
    "production capacity cost investment scenario projection horizon"
).split()


def generate_labeled_corpus(
    ontology: Ontology,
    count: int,
    *,
    rng: random.Random,
    languages: tuple[str, ...] = ("EN",),
    threshold: float = 1.0,
    relevant_fraction: float = 0.5,
    max_planted: int = 4,
    label_noise: float = 0.0,
) -> LabeledCorpus:
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    lexicon = build_lexicon(ontology, languages)
    return generate_from_lexicon(
        lexicon,
        count,
        rng=rng,
        threshold=threshold,
        relevant_fraction=relevant_fraction,
        max_planted=max_planted,
        label_noise=label_noise,
    )


def generate_from_lexicon(
    lexicon: Lexicon,
    count: int,
    *,
    rng: random.Random,
    threshold: float = 1.0,
    relevant_fraction: float = 0.5,
    max_planted: int = 4,
    label_noise: float = 0.0,
) -> LabeledCorpus:
    lexicon_tokens = {token for entry in lexicon.entries for token in entry.tokens}
    fillers = [w for w in FILLER_WORDS if w not in lexicon_tokens]
    if not fillers:
        raise ValueError("no filler vocabulary left after removing lexicon collisions")
    entries = sorted(lexicon.entries, key=lambda e: (e.concept_id, e.term, e.language))

    documents = []
    labels: dict[str, bool] = {}
    for i in range(count):
        planted: list[str] = []
        if entries and rng.random() < relevant_fraction:
            # Plant concept terms until the intended max-weight sum clears
            # the threshold (capped; accidental shortfalls just yield an
            # honest negative label below).
            weights: dict[str, float] = {}
            for _ in range(max_planted * 3):
                entry = rng.choice(entries)
                planted.append(entry.term)
                current = weights.get(entry.concept_id, 0.0)
                weights[entry.concept_id] = max(current, entry.weight)
                if sum(weights.values()) >= threshold or len(planted) >= max_planted:
                    break
        elif entries and rng.random() < 0.5:
            # Background density: a stray low-signal mention or two.
            for _ in range(rng.randint(1, 2)):
                planted.append(rng.choice(entries).term)

        words = [rng.choice(fillers) for _ in range(rng.randint(20, 60))]
        for term in planted:
            words.insert(rng.randint(0, len(words)), term)
        title = " ".join(rng.choice(fillers) for _ in range(rng.randint(3, 8)))
        keywords = tuple(rng.choice(fillers) for _ in range(rng.randint(0, 4)))
        doc = Document(
            id=f"synth-{i:04d}",
            title=title,
            abstract_text=" ".join(words),
            keywords=keywords,
        )
        label = categorize(lexicon, doc, threshold).relevant
        # Drawn unconditionally so the noise level never shifts the stream
        # of document draws; same seed, same documents, any noise.
        if rng.random() < label_noise:
            label = not label
        documents.append(doc)
        labels[doc.id] = label
    return LabeledCorpus(documents=tuple(documents), labels=labels)
