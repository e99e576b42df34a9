"""Exception types shared across the toolkit.

Parameter/domain errors (bad threshold, n out of range, ...) raise plain
:class:`ValueError`; everything that concerns ontology data, wire formats,
or stores gets a dedicated class below so callers can map them to exit
codes and HTTP statuses.
"""

from __future__ import annotations


class OntowindError(Exception):
    """Base class for all toolkit errors."""


class UnknownIdError(OntowindError):
    """A concept or instance id was looked up but does not exist."""

    def __init__(self, id: str):
        super().__init__(f"unknown id: {id!r}")
        self.id = id


class ValidationError(OntowindError):
    """Ontology data violates a model invariant.

    Carries the list of :class:`ontowind.model.Violation` values that
    triggered it (possibly a single synthesized one for parse-stage
    problems such as synonym/weight length mismatches).
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        extra = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"{len(self.violations)} violation(s): {lines}{extra}")


class XmlError(OntowindError):
    """Input is not well-formed XML."""


class UnsupportedConstructError(OntowindError):
    """The OWL input uses an axiom outside the supported subset."""

    def __init__(self, construct: str, detail: str = ""):
        self.construct = construct
        message = f"unsupported OWL construct: {construct}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class JsonError(OntowindError):
    """Input is not well-formed JSON (or not UTF-8)."""


class SchemaError(OntowindError):
    """JSON is well-formed but does not match the expected document schema."""


class DuplicateDocumentIdError(OntowindError):
    """A corpus contains two documents with the same id."""

    def __init__(self, document_id: str):
        super().__init__(f"duplicate document id: {document_id!r}")
        self.document_id = document_id


class LabelMismatchError(OntowindError):
    """Labels and documents of a labeled corpus do not line up."""


class CorruptStoreError(OntowindError):
    """The article store failed line-level parsing; writes are refused."""
