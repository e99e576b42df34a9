"""Token normalization shared by the lexicon builder, matcher, and miner."""

from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

# Turkish-specific folding, applied only on request: folding by default would
# collapse Turkish minimal pairs, so the flag is off unless a caller opts in.
_DIACRITIC_FOLD = str.maketrans(
    {
        "ç": "c",
        "ğ": "g",
        "ı": "i",
        "ö": "o",
        "ş": "s",
        "ü": "u",
        "̇": None,  # combining dot above, left over from casefolded "İ"
    }
)


def normalize(text: str, *, fold_diacritics: bool = False) -> list[str]:
    """Case-fold ``text`` and split it into matchable tokens.

    Splits on whitespace and punctuation (both dropped), treats hyphens as
    splitters, and keeps digits: ``"Wind-Turbine blades."`` becomes
    ``["wind", "turbine", "blades"]``.
    """
    folded = text.casefold()
    if fold_diacritics:
        folded = folded.translate(_DIACRITIC_FOLD)
    return _TOKEN_RE.findall(folded)
