"""Command-line entry point.

Machine-first output: results go to stdout as JSON (``--pretty`` switches
to an indented/tabular human form), logs go to stderr. Exit codes are
stable: 0 success, 1 validation or evaluation failure, 2 usage error,
3 I/O error. ONTOWIND_ONTOLOGY provides the default ontology path where a
command accepts one.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from . import __version__
from .canonical import serialize_canonical
from .categorizer import Document, categorize
from .corpus import load_documents, load_labeled_corpus
from .errors import OntowindError, ValidationError
from .evaluation import comparison_table, evaluation_report, evaluate, compare, matrix_to_json, report_table
from .formats import load_ontology, save_ontology
from .matching import build_lexicon
from .model import validate as validate_ontology
from .ngrams import DEFAULT_STOPWORDS, RECIPROCAL_RANK, UNIFORM, extract_ngrams, scaffold, scaffold_to_ontology
from .service import load_config, serve
from .store import ArticleStore, ingest as run_ingest, result_to_json

ONTOLOGY_ENV = "ONTOWIND_ONTOLOGY"


def _emit(payload, pretty: bool) -> None:
    if pretty:
        click.echo(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))
    else:
        click.echo(json.dumps(payload, ensure_ascii=False, sort_keys=True))


def _log(message: str) -> None:
    click.echo(message, err=True)


def _exit_codes(fn):
    """Map error classes onto the stable exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except click.ClickException:
            raise
        except OSError as exc:
            _log(f"I/O error: {exc}")
            sys.exit(3)
        except (OntowindError, ValueError) as exc:
            _log(f"error: {exc}")
            sys.exit(1)

    return wrapper


def _default_ontology(explicit: str | None) -> str:
    if explicit is not None:
        return explicit
    from_env = os.environ.get(ONTOLOGY_ENV)
    if not from_env:
        raise click.UsageError(f"missing ontology path (argument or ${ONTOLOGY_ENV})")
    return from_env


def _lexicon_options(fn):
    fn = click.option("--languages", default="EN", show_default=True, help="Comma-separated language codes.")(fn)
    fn = click.option("--labels-only", is_flag=True, help="Match primary labels only, no synonyms.")(fn)
    fn = click.option("--fold-diacritics", is_flag=True, help="Fold Turkish diacritics while matching.")(fn)
    return fn


def _build_lexicon(ontology_path, languages, labels_only, fold_diacritics):
    ontology = load_ontology(ontology_path)
    return build_lexicon(
        ontology,
        tuple(code.strip() for code in languages.split(",") if code.strip()),
        labels_only=labels_only,
        fold_diacritics=fold_diacritics,
    )


@click.group()
@click.version_option(version=__version__, prog_name="ontowind")
def main():
    """Wind-energy ontology toolkit."""


@main.command("validate")
@click.argument("ontology", required=False)
@click.option("--pretty", is_flag=True)
@_exit_codes
def validate_cmd(ontology, pretty):
    """Check an ontology file against the model invariants."""
    path = _default_ontology(ontology)
    try:
        loaded = load_ontology(path)
        violations = validate_ontology(loaded)
    except ValidationError as exc:
        violations = exc.violations
    payload = {
        "violations": [{"rule": v.rule, "subject": v.subject, "message": v.message} for v in violations],
        "count": len(violations),
    }
    _emit(payload, pretty)
    _log(f"{len(violations)} violations")
    if violations:
        sys.exit(1)


@main.command("convert")
@click.argument("source")
@click.argument("target")
@_exit_codes
def convert_cmd(source, target):
    """Convert between OWL (.owl/.rdf/.xml) and canonical JSON (.json)."""
    ontology = load_ontology(source)
    save_ontology(ontology, target)
    _log(f"wrote {target} ({len(ontology.concepts)} concepts, {len(ontology.instances)} instances)")


@main.command("categorize")
@click.argument("ontology", required=False)
@click.argument("doc", required=False)
@click.option("--threshold", type=float, default=1.0, show_default=True)
@click.option("--strict-label-weights", is_flag=True, help="Weight matches by the concept's EN label weight.")
@click.option("--pretty", is_flag=True)
@_lexicon_options
@_exit_codes
def categorize_cmd(ontology, doc, threshold, strict_label_weights, pretty, languages, labels_only, fold_diacritics):
    """Categorize one document (a text/JSON file, or '-' for stdin text)."""
    if doc is None:  # single argument given: it is the document, ontology comes from the env
        doc, ontology = ontology, None
    if doc is None:
        raise click.UsageError("missing document argument (path or '-')")
    lexicon = _build_lexicon(_default_ontology(ontology), languages, labels_only, fold_diacritics)
    document = _read_document(doc)
    result = categorize(lexicon, document, threshold, strict_label_weights=strict_label_weights)
    _emit(result_to_json(result), pretty)


def _read_document(source: str) -> Document:
    if source == "-":
        return _document_from_text("stdin", sys.stdin.read())
    if source.endswith(".json"):
        with open(source, encoding="utf-8") as fh:
            record = json.load(fh)
        from .corpus import _document_from_record

        doc, _ = _document_from_record(record, source)
        return doc
    with open(source, encoding="utf-8") as fh:
        return _document_from_text(os.path.splitext(os.path.basename(source))[0], fh.read())


def _document_from_text(doc_id: str, text: str) -> Document:
    lines = text.splitlines()
    title = ""
    rest = 0
    for i, line in enumerate(lines):
        if line.strip():
            title, rest = line.strip(), i + 1
            break
    return Document(id=doc_id, title=title, abstract_text="\n".join(lines[rest:]).strip())


@main.command("mine")
@click.argument("corpus")
@click.option("--n", "n_range", default="1,3", show_default=True, help="N-gram sizes as 'NMIN,NMAX' (or a single NMAX).")
@click.option("--min-freq", type=int, default=5, show_default=True)
@click.option("--top-k", type=int, default=50, show_default=True)
@click.option("--weight-rule", type=click.Choice([RECIPROCAL_RANK, UNIFORM]), default=RECIPROCAL_RANK, show_default=True)
@click.option("--uniform-weight", type=float, default=0.5, show_default=True)
@click.option("--stopwords", "stopwords_file", default=None, help="File with one stopword per line (overrides the built-in list).")
@click.option("--stats", is_flag=True, help="Emit the ranked n-gram stats instead of the scaffold fragment.")
@click.option("--pretty", is_flag=True)
@_exit_codes
def mine_cmd(corpus, n_range, min_freq, top_k, weight_rule, uniform_weight, stopwords_file, stats, pretty):
    """Mine high-frequency n-grams and emit a candidate-concept scaffold."""
    parts = [p for p in n_range.split(",") if p.strip()]
    try:
        if len(parts) == 1:
            bounds = (1, int(parts[0]))
        elif len(parts) == 2:
            bounds = (int(parts[0]), int(parts[1]))
        else:
            raise ValueError
    except ValueError:
        raise click.UsageError(f"--n expects 'NMIN,NMAX' or 'NMAX', got {n_range!r}") from None
    stopword_set = DEFAULT_STOPWORDS
    if stopwords_file is not None:
        with open(stopwords_file, encoding="utf-8") as fh:
            stopword_set = frozenset(word.strip().casefold() for word in fh if word.strip())
    docs = load_documents(corpus)
    ranked = extract_ngrams(docs, bounds, stopwords=stopword_set, min_freq=min_freq)
    if stats:
        payload = [
            {"ngram": " ".join(s.ngram), "frequency": s.frequency, "documentFrequency": s.document_frequency}
            for s in ranked
        ]
        _emit(payload, pretty)
        return
    entries = scaffold(ranked, top_k, weight_rule=weight_rule, uniform_weight=uniform_weight) if ranked else []
    fragment = scaffold_to_ontology(entries)
    sys.stdout.write(serialize_canonical(fragment).decode("utf-8"))
    _log(f"{len(ranked)} n-grams, {len(entries)} candidates")


@main.command("eval")
@click.argument("ontology", required=False)
@click.argument("corpus", required=False)
@click.option("--threshold", type=float, default=1.0, show_default=True)
@click.option("--strict-label-weights", is_flag=True)
@click.option("--pretty", is_flag=True, help="Human-readable table instead of JSON.")
@_lexicon_options
@_exit_codes
def eval_cmd(ontology, corpus, threshold, strict_label_weights, pretty, languages, labels_only, fold_diacritics):
    """Evaluate the categorizer against a labeled JSON-lines corpus."""
    if corpus is None:
        corpus, ontology = ontology, None
    if corpus is None:
        raise click.UsageError("missing labeled corpus argument")
    lexicon = _build_lexicon(_default_ontology(ontology), languages, labels_only, fold_diacritics)
    labeled = load_labeled_corpus(corpus)
    cm = evaluate(lexicon, labeled, threshold, strict_label_weights=strict_label_weights)
    if pretty:
        click.echo(report_table(cm))
    else:
        _emit(evaluation_report(cm), pretty=False)


@main.command("compare")
@click.argument("ontology_a")
@click.argument("ontology_b")
@click.argument("corpus")
@click.option("--threshold", type=float, default=1.0, show_default=True)
@click.option("--pretty", is_flag=True, help="Human-readable table instead of JSON.")
@_lexicon_options
@_exit_codes
def compare_cmd(ontology_a, ontology_b, corpus, threshold, pretty, languages, labels_only, fold_diacritics):
    """Compare two ontology configurations on the same labeled corpus."""
    lexicon_a = _build_lexicon(ontology_a, languages, labels_only, fold_diacritics)
    lexicon_b = _build_lexicon(ontology_b, languages, labels_only, fold_diacritics)
    labeled = load_labeled_corpus(corpus)
    report = compare(lexicon_a, lexicon_b, labeled, threshold)
    if pretty:
        click.echo(comparison_table(report, ontology_a, ontology_b))
        return
    _emit(
        {
            "a": {"matrix": matrix_to_json(report.matrix_a), "accuracy": round(report.accuracy_a, 6)},
            "b": {"matrix": matrix_to_json(report.matrix_b), "accuracy": round(report.accuracy_b, 6)},
            "disagreements": [
                {
                    "documentId": d.document_id,
                    "relevantA": d.relevant_a,
                    "relevantB": d.relevant_b,
                    "conceptsA": list(d.concepts_a),
                    "conceptsB": list(d.concepts_b),
                }
                for d in report.disagreements
            ],
        },
        pretty=False,
    )


@main.command("ingest")
@click.argument("ontology", required=False)
@click.argument("corpus", required=False)
@click.argument("store_path", required=False, metavar="STORE")
@click.option("--threshold", type=float, default=1.0, show_default=True)
@click.option("--pretty", is_flag=True)
@_lexicon_options
@_exit_codes
def ingest_cmd(ontology, corpus, store_path, threshold, pretty, languages, labels_only, fold_diacritics):
    """Categorize a corpus and append the relevant articles to a store."""
    if store_path is None:  # two arguments given: ontology comes from the env
        ontology, corpus, store_path = None, ontology, corpus
    if corpus is None or store_path is None:
        raise click.UsageError("usage: ingest [ONTOLOGY] CORPUS STORE")
    lexicon = _build_lexicon(_default_ontology(ontology), languages, labels_only, fold_diacritics)
    docs = load_documents(corpus)
    store = ArticleStore(store_path)
    report = run_ingest(docs, store, lexicon, threshold)
    _emit(
        {
            "scanned": report.scanned,
            "relevant": report.relevant,
            "stored": report.stored,
            "duplicates": report.duplicates,
        },
        pretty,
    )


@main.command("serve")
@click.argument("config")
@_exit_codes
def serve_cmd(config):
    """Run the portal HTTP service from a JSON config file."""
    serve(load_config(config))


if __name__ == "__main__":
    main()
