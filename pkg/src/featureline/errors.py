"""Exception types shared across the package."""

from __future__ import annotations


class FeatureLineError(Exception):
    """Base class for all domain errors."""


class FormulaSyntaxError(FeatureLineError):
    """Raised on malformed formula text; carries line and column (1-based)."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownLabelError(FeatureLineError):
    """A label was referenced that the context does not know about."""

    def __init__(self, label: str, context: str = ""):
        detail = f"unknown label {label!r}"
        if context:
            detail += f" ({context})"
        super().__init__(detail)
        self.label = label


class DnfSizeError(FeatureLineError):
    """Disjunctive-normal-form expansion exceeded the clause cap."""

    def __init__(self, clause_count: int, max_clauses: int):
        super().__init__(
            f"DNF expansion exceeds {max_clauses} clauses (reached {clause_count})"
        )
        self.clause_count = clause_count
        self.max_clauses = max_clauses


class CompileError(FeatureLineError):
    """A constraint declaration could not be lowered into the model."""


class VoidModelError(FeatureLineError):
    """The model admits no valid configuration at all."""


class InvalidDecisionError(FeatureLineError):
    """A user decision targeted a box that is not open."""


class NothingToUndoError(FeatureLineError):
    """Undo was requested on a state with no user decisions."""


class StateModelMismatchError(FeatureLineError):
    """A configuration state was used against a model it does not belong to."""


class ModelSyntaxError(FeatureLineError):
    """Raised on malformed model files; carries line and column (1-based)."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ModelValidationError(FeatureLineError):
    """A parsed model violates structural invariants; carries the report."""

    def __init__(self, violations):
        lines = "; ".join(str(v) for v in violations)
        super().__init__(f"invalid model: {lines}")
        self.violations = list(violations)


class CapExceededError(FeatureLineError):
    """Enumeration was requested over more labels than the configured cap."""

    def __init__(self, label_count: int, cap: int):
        super().__init__(f"model has {label_count} labels, enumeration cap is {cap}")
        self.label_count = label_count
        self.cap = cap


class ReplayDivergenceError(FeatureLineError):
    """Replaying a stored decision journal did not reproduce the stored states."""


class CatalogError(FeatureLineError):
    """Malformed asset catalog (duplicate ids and similar)."""
