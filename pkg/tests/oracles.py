"""Independent brute-force oracles the fast implementations are checked against.

These stay deliberately naive: try every entry at every position, count
every sliding window with nested loops. They share nothing with the
indexed implementations except the published tie-break rule.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict

from ontowind.matching import LexiconEntry
from ontowind.model import EntryKind


def oracle_matches(entries, tokens):
    """Leftmost-longest, non-overlapping, greedy left-to-right."""
    matches = []
    i = 0
    n = len(tokens)
    while i < n:
        candidates = []
        for entry in entries:
            size = len(entry.tokens)
            if size and tuple(tokens[i : i + size]) == tuple(entry.tokens):
                candidates.append(entry)
        if candidates:
            longest = max(len(e.tokens) for e in candidates)
            tied = [e for e in candidates if len(e.tokens) == longest]
            best = min(tied, key=lambda e: (e.concept_id, e.kind.value, e.language, e.term))
            matches.append((best.concept_id, best, (i, i + longest - 1)))
            i += longest
        else:
            i += 1
    return matches


def oracle_verdict(entries, tokens, threshold):
    """Distinct-concept max-weight sum compared against the threshold."""
    best = {}
    for concept_id, entry, _span in oracle_matches(entries, tokens):
        if concept_id not in best or entry.weight > best[concept_id]:
            best[concept_id] = entry.weight
    # The score contract is the correctly rounded (order-independent) sum.
    score = math.fsum(best.values())
    return bool(best) and score >= threshold, score


def oracle_ngrams(token_docs, n_min, n_max, stopwords, min_freq):
    """Sliding-window counter over every document."""
    frequency = defaultdict(int)
    document_frequency = defaultdict(int)
    for tokens in token_docs:
        seen = set()
        for start in range(len(tokens)):
            for end in range(start + 1, len(tokens) + 1):
                if end - start > n_max:
                    break
                if end - start < n_min:
                    continue
                gram = tuple(tokens[start:end])
                if gram[0] in stopwords or gram[-1] in stopwords:
                    continue
                frequency[gram] += 1
                seen.add(gram)
        for gram in seen:
            document_frequency[gram] += 1
    rows = [
        (gram, frequency[gram], document_frequency[gram])
        for gram in frequency
        if frequency[gram] >= min_freq
    ]
    rows.sort(key=lambda row: (-row[1], -len(row[0]), row[0]))
    return rows


MATCH_VOCAB = (
    "wind", "turbine", "power", "plant", "energy", "speed", "model",
    "data", "farm", "blade", "solar", "grid", "storm", "weather",
)


def random_entries(rng: random.Random, max_entries: int = 50) -> list[LexiconEntry]:
    entries = []
    for _ in range(rng.randint(1, max_entries)):
        tokens = tuple(rng.choice(MATCH_VOCAB) for _ in range(rng.randint(1, 3)))
        kind = rng.choice((EntryKind.PRIMARY_LABEL, EntryKind.SYNONYM))
        entries.append(
            LexiconEntry(
                tokens=tokens,
                concept_id=f"C{rng.randint(0, 9)}",
                term=" ".join(tokens),
                language=rng.choice(("EN", "TR")),
                kind=kind,
                weight=rng.randint(0, 100) / 100,
            )
        )
    return entries


def random_prefix_free_entries(rng: random.Random, max_entries: int = 20) -> list[LexiconEntry]:
    """No entry's token sequence is a prefix of another's."""
    entries = random_entries(rng, max_entries)
    kept: list[LexiconEntry] = []
    for entry in entries:
        clash = any(
            entry.tokens[: len(other.tokens)] == other.tokens
            or other.tokens[: len(entry.tokens)] == entry.tokens
            for other in kept
        )
        if not clash:
            kept.append(entry)
    return kept


def random_tokens(rng: random.Random, max_len: int = 200) -> list[str]:
    return [rng.choice(MATCH_VOCAB) for _ in range(rng.randint(0, max_len))]
