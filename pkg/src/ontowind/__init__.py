"""Wind-energy ontology toolkit.

A fuzzy-weighted multilingual ontology model with OWL/JSON interchange, an
ontology-backed text categorizer, an n-gram miner for semi-automatic
ontology bootstrapping, an evaluation harness, and a web portal service.
"""

from .canonical import parse_canonical, serialize_canonical
from .categorizer import (
    CategorizationResult,
    ConceptContribution,
    Document,
    categorize,
    categorize_corpus,
    document_text,
    reciprocal_rank_weight,
)
from .errors import (
    CorruptStoreError,
    DuplicateDocumentIdError,
    JsonError,
    LabelMismatchError,
    OntowindError,
    SchemaError,
    UnknownIdError,
    UnsupportedConstructError,
    ValidationError,
    XmlError,
)
from .evaluation import (
    ComparisonReport,
    ConfusionMatrix,
    LabeledCorpus,
    accuracy,
    compare,
    evaluate,
    load_reference_results,
)
from .formats import load_ontology, save_ontology
from .matching import ConceptMatch, Lexicon, LexiconEntry, build_lexicon, find_matches
from .model import (
    Concept,
    ConceptTree,
    EntryKind,
    Instance,
    LexicalEntry,
    Ontology,
    Violation,
    instances_of,
    subtree,
    validate,
)
from .ngrams import NgramStats, ScaffoldEntry, extract_ngrams, scaffold, scaffold_to_ontology
from .owl import parse_owl, serialize_owl
from .seed import load_seed
from .store import ArticleRecord, ArticleStore, IngestReport, ingest
from .text import normalize

__version__ = "0.1.0"

__all__ = [
    "ArticleRecord",
    "ArticleStore",
    "CategorizationResult",
    "ComparisonReport",
    "Concept",
    "ConceptContribution",
    "ConceptMatch",
    "ConceptTree",
    "ConfusionMatrix",
    "CorruptStoreError",
    "Document",
    "DuplicateDocumentIdError",
    "EntryKind",
    "IngestReport",
    "Instance",
    "JsonError",
    "LabelMismatchError",
    "LabeledCorpus",
    "LexicalEntry",
    "Lexicon",
    "LexiconEntry",
    "Ontology",
    "OntowindError",
    "SchemaError",
    "UnknownIdError",
    "UnsupportedConstructError",
    "ValidationError",
    "Violation",
    "XmlError",
    "accuracy",
    "build_lexicon",
    "categorize",
    "categorize_corpus",
    "compare",
    "document_text",
    "evaluate",
    "extract_ngrams",
    "find_matches",
    "ingest",
    "instances_of",
    "load_ontology",
    "load_reference_results",
    "load_seed",
    "normalize",
    "parse_canonical",
    "parse_owl",
    "reciprocal_rank_weight",
    "save_ontology",
    "scaffold",
    "scaffold_to_ontology",
    "serialize_canonical",
    "serialize_owl",
    "subtree",
    "validate",
    "NgramStats",
    "ScaffoldEntry",
]
