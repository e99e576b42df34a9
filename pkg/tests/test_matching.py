import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ontowind import EntryKind, Lexicon, LexiconEntry, build_lexicon, find_matches, normalize
from ontowind.matching import match_tokens

from oracles import MATCH_VOCAB, oracle_matches, random_entries, random_tokens


def _entry(tokens, concept_id, weight=1.0, kind=EntryKind.PRIMARY_LABEL, language="EN"):
    return LexiconEntry(
        tokens=tuple(tokens),
        concept_id=concept_id,
        term=" ".join(tokens),
        language=language,
        kind=kind,
        weight=weight,
    )


class TestNormalize:
    def test_hyphen_and_punctuation_split(self):
        assert normalize("Wind-Turbine blades.") == ["wind", "turbine", "blades"]

    def test_empty(self):
        assert normalize("") == []

    def test_slash_splits(self):
        assert normalize("ANFIS/ANN") == ["anfis", "ann"]

    def test_digits_kept(self):
        assert normalize("V90 turbine, 3 MW") == ["v90", "turbine", "3", "mw"]

    def test_casefold_is_unicode_aware(self):
        assert normalize("RÜZGAR Enerjisi") == ["rüzgar", "enerjisi"]

    def test_diacritic_folding_is_opt_in(self):
        assert normalize("rüzgar türbini") == ["rüzgar", "türbini"]
        assert normalize("rüzgar türbini", fold_diacritics=True) == ["ruzgar", "turbini"]

    def test_underscore_is_a_separator(self):
        assert normalize("wind_speed") == ["wind", "speed"]


class TestLexicon:
    def test_entries_require_tokens(self):
        with pytest.raises(ValueError):
            Lexicon([_entry((), "X")])

    def test_build_from_seed_contains_wind_turbine(self, seed_lexicon_en):
        assert any(
            e.tokens == ("wind", "turbine") and e.concept_id == "WindTurbine"
            for e in seed_lexicon_en.entries
        )

    def test_empty_language_set_yields_empty_lexicon(self, seed):
        assert len(build_lexicon(seed, ())) == 0

    def test_language_sets_union_disjointly(self, seed, seed_lexicon_en, seed_lexicon_all):
        tr_only = build_lexicon(seed, ("TR",))
        assert len(seed_lexicon_all) == len(seed_lexicon_en) + len(tr_only)

    def test_labels_only_excludes_synonyms(self, seed):
        full = build_lexicon(seed, ("EN",))
        labels = build_lexicon(seed, ("EN",), labels_only=True)
        assert len(labels) < len(full)
        assert all(e.kind is EntryKind.PRIMARY_LABEL for e in labels.entries)

    def test_primary_label_weights_exposed(self, seed_lexicon_en):
        assert seed_lexicon_en.primary_label_weights["WindTurbine"] == 1.0
        assert seed_lexicon_en.primary_label_weights["Temperature"] == 0.2


class TestFindMatches:
    def test_longest_match_wins(self):
        lexicon = Lexicon([_entry(("wind", "power", "plant"), "WindPowerPlant"), _entry(("wind", "power"), "WindPower")])
        matches = find_matches(lexicon, "the wind power plant")
        assert [(m.concept_id, m.span) for m in matches] == [("WindPowerPlant", (1, 3))]

    def test_empty_text(self, seed_lexicon_en):
        assert find_matches(seed_lexicon_en, "") == []

    def test_repeated_terms_all_reported(self):
        lexicon = Lexicon([_entry(("wind",), "X")])
        matches = find_matches(lexicon, "wind, Wind, WIND")
        assert [m.concept_id for m in matches] == ["X", "X", "X"]
        assert [m.span for m in matches] == [(0, 0), (1, 1), (2, 2)]

    def test_token_boundary_no_substring_match(self):
        lexicon = Lexicon([_entry(("wind",), "X")])
        assert find_matches(lexicon, "windmill") == []

    def test_case_invariance(self, seed_lexicon_en):
        text = "Wind turbines and wind POWER plants near the wind farm"
        lower = [(m.concept_id, m.span) for m in find_matches(seed_lexicon_en, text)]
        upper = [(m.concept_id, m.span) for m in find_matches(seed_lexicon_en, text.upper())]
        assert lower == upper

    def test_matches_never_overlap(self, seed_lexicon_en):
        text = "wind power plant wind turbine wind speed wind farm sensor"
        matches = find_matches(seed_lexicon_en, text)
        for earlier, later in zip(matches, matches[1:]):
            assert earlier.span[1] < later.span[0]

    def test_tie_break_is_deterministic_and_weight_free(self):
        # Same token sequence registered for two concepts: the smaller
        # (concept id, kind, language, term) wins regardless of weight.
        lexicon = Lexicon([_entry(("wind",), "B", weight=0.9), _entry(("wind",), "A", weight=0.1)])
        matches = find_matches(lexicon, "wind")
        assert [m.concept_id for m in matches] == ["A"]

    def test_fold_diacritics_applies_to_both_sides(self, seed):
        folded = build_lexicon(seed, ("TR",), fold_diacritics=True)
        matches = find_matches(folded, "RUZGAR TURBINI basariyla kuruldu")
        assert any(m.concept_id == "WindTurbine" for m in matches)

    def test_oracle_equivalence_seeded(self):
        rng = random.Random(20260810)
        for _ in range(300):
            entries = random_entries(rng, max_entries=30)
            tokens = random_tokens(rng, max_len=80)
            lexicon = Lexicon(entries)
            got = [(m.concept_id, m.span) for m in match_tokens(lexicon, tokens)]
            want = [(cid, span) for cid, _e, span in oracle_matches(entries, tokens)]
            assert got == want


@settings(max_examples=200, deadline=None)
@given(
    st.data(),
)
def test_oracle_equivalence_property(data):
    vocab = MATCH_VOCAB
    entry_specs = data.draw(
        st.lists(
            st.tuples(
                st.lists(st.sampled_from(vocab), min_size=1, max_size=3),
                st.sampled_from("ABCD"),
                st.integers(0, 100),
            ),
            min_size=1,
            max_size=25,
        )
    )
    entries = [_entry(tuple(toks), cid, weight=w / 100) for toks, cid, w in entry_specs]
    tokens = data.draw(st.lists(st.sampled_from(vocab), max_size=60))
    lexicon = Lexicon(entries)
    got = [(m.concept_id, m.span) for m in match_tokens(lexicon, tokens)]
    want = [(cid, span) for cid, _e, span in oracle_matches(entries, tokens)]
    assert got == want
