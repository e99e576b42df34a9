"""Evaluation harness: confusion matrices, accuracy, and A/B comparison.

Accuracy is reported to 3 decimal places and as a percentage rounded to
1 decimal. Precision/recall/F1 come along as bonus fields. The bundled
reference results (data/reference_results.json) hold the published
evaluation counts for the OntoWind- and WONT-based categorizers on a
91-article corpus; they exist so the arithmetic can be checked without
the corpus itself, which is not redistributable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .categorizer import CategorizationResult, Document, categorize
from .errors import LabelMismatchError
from .matching import Lexicon


@dataclass(frozen=True)
class LabeledCorpus:
    documents: tuple[Document, ...]
    labels: Mapping[str, bool]  # document id -> relevant to wind energy

    def check(self) -> None:
        doc_ids = {doc.id for doc in self.documents}
        labeled = set(self.labels)
        if doc_ids != labeled:
            missing = sorted(doc_ids - labeled)[:5]
            extra = sorted(labeled - doc_ids)[:5]
            raise LabelMismatchError(f"unlabeled documents {missing}, labels without documents {extra}")

    @property
    def positives(self) -> int:
        return sum(1 for v in self.labels.values() if v)


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fn: int
    tn: int
    fp: int

    def __post_init__(self):
        for name in ("tp", "fn", "tn", "fp"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    @property
    def total(self) -> int:
        return self.tp + self.fn + self.tn + self.fp


def accuracy(cm: ConfusionMatrix) -> float:
    if cm.total == 0:
        raise ValueError("empty confusion matrix")
    return (cm.tp + cm.tn) / cm.total


def precision(cm: ConfusionMatrix) -> float | None:
    predicted_positive = cm.tp + cm.fp
    return cm.tp / predicted_positive if predicted_positive else None


def recall(cm: ConfusionMatrix) -> float | None:
    positive = cm.tp + cm.fn
    return cm.tp / positive if positive else None


def f1(cm: ConfusionMatrix) -> float | None:
    p, r = precision(cm), recall(cm)
    if p is None or r is None or p + r == 0:
        return None
    return 2 * p * r / (p + r)


def format_accuracy(value: float) -> str:
    return f"{value:.3f} ({value * 100:.1f}%)"


def evaluate(
    lexicon: Lexicon,
    corpus: LabeledCorpus,
    threshold: float = 1.0,
    *,
    strict_label_weights: bool = False,
) -> ConfusionMatrix:
    """Confusion matrix of the categorizer's verdicts against the labels."""
    corpus.check()
    tp = fn = tn = fp = 0
    for doc in corpus.documents:
        predicted = categorize(lexicon, doc, threshold, strict_label_weights=strict_label_weights).relevant
        actual = corpus.labels[doc.id]
        if actual and predicted:
            tp += 1
        elif actual and not predicted:
            fn += 1
        elif not actual and not predicted:
            tn += 1
        else:
            fp += 1
    return ConfusionMatrix(tp=tp, fn=fn, tn=tn, fp=fp)


@dataclass(frozen=True)
class Disagreement:
    document_id: str
    relevant_a: bool
    relevant_b: bool
    concepts_a: tuple[str, ...]
    concepts_b: tuple[str, ...]


@dataclass(frozen=True)
class ComparisonReport:
    matrix_a: ConfusionMatrix
    matrix_b: ConfusionMatrix
    accuracy_a: float
    accuracy_b: float
    disagreements: tuple[Disagreement, ...]


def compare(
    lexicon_a: Lexicon,
    lexicon_b: Lexicon,
    corpus: LabeledCorpus,
    threshold: float = 1.0,
) -> ComparisonReport:
    """Evaluate two lexicons side by side, listing per-document disagreements."""
    corpus.check()
    disagreements = []
    for doc in corpus.documents:
        result_a = categorize(lexicon_a, doc, threshold)
        result_b = categorize(lexicon_b, doc, threshold)
        if result_a.relevant != result_b.relevant:
            disagreements.append(
                Disagreement(
                    document_id=doc.id,
                    relevant_a=result_a.relevant,
                    relevant_b=result_b.relevant,
                    concepts_a=_concept_ids(result_a),
                    concepts_b=_concept_ids(result_b),
                )
            )
    matrix_a = evaluate(lexicon_a, corpus, threshold)
    matrix_b = evaluate(lexicon_b, corpus, threshold)
    return ComparisonReport(
        matrix_a=matrix_a,
        matrix_b=matrix_b,
        accuracy_a=accuracy(matrix_a),
        accuracy_b=accuracy(matrix_b),
        disagreements=tuple(disagreements),
    )


def _concept_ids(result: CategorizationResult) -> tuple[str, ...]:
    return tuple(c.concept_id for c in result.matched_concepts)


def matrix_to_json(cm: ConfusionMatrix) -> dict:
    return {"tp": cm.tp, "fn": cm.fn, "tn": cm.tn, "fp": cm.fp, "total": cm.total}


def evaluation_report(cm: ConfusionMatrix) -> dict:
    return {
        "matrix": matrix_to_json(cm),
        "accuracy": round(accuracy(cm), 6),
        "accuracyDisplay": format_accuracy(accuracy(cm)),
        "precision": _round_or_none(precision(cm)),
        "recall": _round_or_none(recall(cm)),
        "f1": _round_or_none(f1(cm)),
    }


def _round_or_none(value: float | None) -> float | None:
    return None if value is None else round(value, 6)


def report_table(cm: ConfusionMatrix, name: str = "categorizer") -> str:
    """Human-readable one-row results table."""
    header = f"{'':24}  TP  FN  TN  FP  Accuracy"
    row = f"{name:24}  {cm.tp:2d}  {cm.fn:2d}  {cm.tn:2d}  {cm.fp:2d}  {format_accuracy(accuracy(cm))}"
    return "\n".join([header, row])


def comparison_table(report: ComparisonReport, name_a: str = "A", name_b: str = "B") -> str:
    width = max(24, len(name_a), len(name_b))
    lines = [f"{'':{width}}  TP  FN  TN  FP  Accuracy"]
    for name, cm, acc in (
        (name_a, report.matrix_a, report.accuracy_a),
        (name_b, report.matrix_b, report.accuracy_b),
    ):
        lines.append(f"{name:{width}}  {cm.tp:2d}  {cm.fn:2d}  {cm.tn:2d}  {cm.fp:2d}  {format_accuracy(acc)}")
    lines.append(f"disagreements: {len(report.disagreements)}")
    return "\n".join(lines)


def load_reference_results() -> dict:
    """Bundled reference evaluation counts (see module docstring)."""
    data = resources.files("ontowind").joinpath("data/reference_results.json").read_bytes()
    return json.loads(data)
