import random

import pytest

from ontowind import (
    ConfusionMatrix,
    Document,
    LabeledCorpus,
    LabelMismatchError,
    Lexicon,
    LexiconEntry,
    accuracy,
    compare,
    evaluate,
    load_reference_results,
)
from ontowind.evaluation import comparison_table, f1, format_accuracy, precision, recall, report_table
from ontowind.model import EntryKind
from ontowind.synth import generate_labeled_corpus


def _entry(token, concept_id, weight):
    return LexiconEntry((token,), concept_id, token, "EN", EntryKind.PRIMARY_LABEL, weight)


def _corpus(rows):
    """rows: (id, text, label)"""
    docs = tuple(Document(id=i, title="", abstract_text=text) for i, text, _ in rows)
    labels = {i: label for i, _, label in rows}
    return LabeledCorpus(documents=docs, labels=labels)


class TestAccuracyArithmetic:
    def test_reference_row_one(self):
        assert accuracy(ConfusionMatrix(10, 2, 75, 4)) == pytest.approx(85 / 91)
        assert round(accuracy(ConfusionMatrix(10, 2, 75, 4)), 3) == 0.934

    def test_reference_row_two(self):
        assert accuracy(ConfusionMatrix(10, 2, 64, 15)) == pytest.approx(74 / 91)
        assert round(accuracy(ConfusionMatrix(10, 2, 64, 15)), 3) == 0.813

    def test_all_negative_corpus(self):
        assert accuracy(ConfusionMatrix(0, 0, 5, 0)) == 1.0

    def test_empty_matrix_error(self):
        with pytest.raises(ValueError):
            accuracy(ConfusionMatrix(0, 0, 0, 0))

    def test_counts_must_be_non_negative(self):
        with pytest.raises(ValueError):
            ConfusionMatrix(-1, 0, 0, 0)

    def test_accuracy_one_iff_no_errors(self):
        rng = random.Random(3)
        for _ in range(100):
            cm = ConfusionMatrix(rng.randint(0, 9), rng.randint(0, 9), rng.randint(0, 9), rng.randint(0, 9))
            if cm.total == 0:
                continue
            assert 0.0 <= accuracy(cm) <= 1.0
            assert (accuracy(cm) == 1.0) == (cm.fn == 0 and cm.fp == 0)

    def test_display_formatting(self):
        assert format_accuracy(85 / 91) == "0.934 (93.4%)"
        assert format_accuracy(74 / 91) == "0.813 (81.3%)"

    def test_bonus_metrics(self):
        cm = ConfusionMatrix(10, 2, 75, 4)
        assert precision(cm) == pytest.approx(10 / 14)
        assert recall(cm) == pytest.approx(10 / 12)
        assert f1(cm) == pytest.approx(2 * (10 / 14) * (10 / 12) / ((10 / 14) + (10 / 12)))
        assert precision(ConfusionMatrix(0, 1, 1, 0)) is None

    def test_reference_results_data_file(self):
        data = load_reference_results()
        assert data["corpus"] == {"articles": 91, "relevant": 12, "irrelevant": 79}
        for name, expected in (("ontowind", 0.934), ("wont", 0.813)):
            row = data["categorizers"][name]
            cm = ConfusionMatrix(row["tp"], row["fn"], row["tn"], row["fp"])
            assert cm.total == 91
            assert cm.tp + cm.fn == 12
            assert round(accuracy(cm), 3) == expected == row["reportedAccuracy"]


class TestEvaluate:
    def test_perfect_predictions(self):
        lexicon = Lexicon([_entry("wind", "W", 1.0)])
        corpus = _corpus([("a", "wind", True), ("b", "calm", False), ("c", "wind wind", True)])
        cm = evaluate(lexicon, corpus)
        assert (cm.tp, cm.fn, cm.tn, cm.fp) == (2, 0, 1, 0)

    def test_positive_label_sum_identity(self):
        lexicon = Lexicon([_entry("wind", "W", 1.0)])
        rng = random.Random(11)
        rows = [(f"d{i}", rng.choice(["wind", "calm", "wind farm"]), rng.random() < 0.4) for i in range(40)]
        corpus = _corpus(rows)
        cm = evaluate(lexicon, corpus)
        assert cm.tp + cm.fn == corpus.positives
        assert cm.tn + cm.fp == len(rows) - corpus.positives

    def test_empty_lexicon_predicts_nothing(self):
        cm = evaluate(Lexicon([]), _corpus([("a", "anything", True)]))
        assert (cm.tp, cm.fn, cm.tn, cm.fp) == (0, 1, 0, 0)

    def test_permutation_invariance(self):
        lexicon = Lexicon([_entry("wind", "W", 1.0)])
        rows = [("a", "wind", True), ("b", "x", False), ("c", "wind", False)]
        assert evaluate(lexicon, _corpus(rows)) == evaluate(lexicon, _corpus(list(reversed(rows))))

    def test_label_mismatch(self):
        lexicon = Lexicon([])
        docs = (Document(id="a", title="", abstract_text=""),)
        with pytest.raises(LabelMismatchError):
            evaluate(lexicon, LabeledCorpus(documents=docs, labels={}))
        with pytest.raises(LabelMismatchError):
            evaluate(lexicon, LabeledCorpus(documents=docs, labels={"a": True, "ghost": False}))


class TestCompare:
    def test_self_comparison(self):
        lexicon = Lexicon([_entry("wind", "W", 1.0)])
        corpus = _corpus([("a", "wind", True), ("b", "x", False)])
        report = compare(lexicon, lexicon, corpus)
        assert report.matrix_a == report.matrix_b
        assert report.accuracy_a == report.accuracy_b
        assert report.disagreements == ()

    def test_constructed_false_positive_gap(self):
        # Lexicon B over-matches a generic term, producing 11 extra false
        # positives; each shows up as a disagreement.
        lexicon_a = Lexicon([_entry("wind", "W", 1.0)])
        lexicon_b = Lexicon([_entry("wind", "W", 1.0), _entry("power", "P", 1.0)])
        rows = [(f"fp{i}", "power systems", False) for i in range(11)]
        rows += [("t1", "wind", True), ("n1", "calm", False)]
        report = compare(lexicon_a, lexicon_b, _corpus(rows))
        assert report.matrix_b.fp - report.matrix_a.fp == 11
        assert len(report.disagreements) == 11
        sample = report.disagreements[0]
        assert sample.relevant_a is False and sample.relevant_b is True
        assert sample.concepts_b == ("P",)

    def test_empty_corpus_is_an_error(self):
        with pytest.raises(ValueError):
            compare(Lexicon([]), Lexicon([]), _corpus([]))

    def test_tables_render(self):
        lexicon = Lexicon([_entry("wind", "W", 1.0)])
        corpus = _corpus([("a", "wind", True), ("b", "x", False)])
        report = compare(lexicon, lexicon, corpus)
        assert "Accuracy" in report_table(report.matrix_a)
        assert "disagreements: 0" in comparison_table(report)


class TestSyntheticCorpus:
    def test_generator_is_deterministic(self, seed):
        a = generate_labeled_corpus(seed, 25, rng=random.Random(5))
        b = generate_labeled_corpus(seed, 25, rng=random.Random(5))
        assert a == b

    def test_labels_match_rule_without_noise(self, seed, seed_lexicon_en):
        from ontowind import categorize

        corpus = generate_labeled_corpus(seed, 50, rng=random.Random(8))
        corpus.check()
        for doc in corpus.documents:
            assert corpus.labels[doc.id] == categorize(seed_lexicon_en, doc).relevant

    def test_density_controls_produce_both_classes(self, seed):
        corpus = generate_labeled_corpus(seed, 60, rng=random.Random(13), relevant_fraction=0.5)
        values = set(corpus.labels.values())
        assert values == {True, False}

    def test_noise_flips_labels(self, seed, seed_lexicon_en):
        from ontowind import categorize

        clean = generate_labeled_corpus(seed, 40, rng=random.Random(21), label_noise=0.0)
        noisy = generate_labeled_corpus(seed, 40, rng=random.Random(21), label_noise=1.0)
        assert clean.documents == noisy.documents
        assert all(clean.labels[d.id] != noisy.labels[d.id] for d in clean.documents)
        cm = evaluate(seed_lexicon_en, noisy)
        assert cm.fn + cm.fp == cm.total
