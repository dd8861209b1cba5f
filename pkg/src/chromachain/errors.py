"""Domain exceptions with stable machine-readable codes.

Every error that can cross the API boundary carries a ``code`` string that
the service layer maps 1:1 onto wire error codes. The code enum is
append-only.
"""

from __future__ import annotations


class ChromaChainError(Exception):
    """Base class; ``code`` is stable across versions."""

    code = "INTERNAL"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details


# --- color notation -------------------------------------------------------

class MalformedNotation(ChromaChainError):
    code = "MALFORMED_NOTATION"


class InvalidSum(ChromaChainError):
    code = "INVALID_SUM"


class InconsistentNeutral(ChromaChainError):
    code = "INCONSISTENT_NEUTRAL"


class NonAdjacentHuePair(ChromaChainError):
    code = "NON_ADJACENT_HUE_PAIR"


class NeutralHasNoAngle(ChromaChainError):
    code = "NEUTRAL_HAS_NO_ANGLE"


# --- configuration / data files -------------------------------------------

class SchemaViolation(ChromaChainError):
    code = "SCHEMA_VIOLATION"


class ExampleParseFailure(ChromaChainError):
    code = "EXAMPLE_PARSE_FAILURE"


class AreaSumMismatch(ChromaChainError):
    code = "AREA_SUM_MISMATCH"


class DanglingAdjacency(ChromaChainError):
    code = "DANGLING_ADJACENCY"


class UnknownScene(ChromaChainError):
    code = "UNKNOWN_SCENE"


class VersionMismatch(ChromaChainError):
    code = "VERSION_MISMATCH"


# --- prompt rendering ------------------------------------------------------

class TokenBudgetExceeded(ChromaChainError):
    code = "TOKEN_BUDGET_EXCEEDED"


class MissingBinding(ChromaChainError):
    code = "MISSING_BINDING"


# --- gateway ----------------------------------------------------------------

class BackendUnreachable(ChromaChainError):
    code = "BACKEND_UNREACHABLE"


class BackendTimeout(ChromaChainError):
    code = "BACKEND_TIMEOUT"


class UnparseableAfterRetries(ChromaChainError):
    code = "UNPARSEABLE_AFTER_RETRIES"

    def __init__(self, message: str, attempts: int, raw_outputs: list[str], **details):
        super().__init__(message, **details)
        self.attempts = attempts
        self.raw_outputs = raw_outputs


class BudgetExceeded(ChromaChainError):
    code = "BUDGET_EXCEEDED"


class UnknownStage(ChromaChainError):
    code = "UNKNOWN_STAGE"


# --- pipeline ----------------------------------------------------------------

class EmptyIntent(ChromaChainError):
    code = "EMPTY_INTENT"


class UnknownTheme(ChromaChainError):
    code = "UNKNOWN_THEME"


class DegreeOutOfRange(ChromaChainError):
    code = "DEGREE_OUT_OF_RANGE"


class ChainIntegrityError(ChromaChainError):
    code = "CHAIN_INTEGRITY"


class LockConflict(ChromaChainError):
    code = "LOCK_CONFLICT"


class NoValidCandidate(ChromaChainError):
    code = "NO_VALID_CANDIDATE"

    def __init__(self, message: str, reports=None, **details):
        super().__init__(message, **details)
        self.reports = reports or []


class NoValidAssignment(ChromaChainError):
    code = "NO_VALID_ASSIGNMENT"

    def __init__(self, message: str, reports=None, **details):
        super().__init__(message, **details)
        self.reports = reports or []


class ValidationRejected(ChromaChainError):
    """An edit or refinement produced error-severity violations."""

    code = "VALIDATION_REJECTED"

    def __init__(self, message: str, report=None, **details):
        super().__init__(message, **details)
        self.report = report


class UnknownElement(ChromaChainError):
    code = "UNKNOWN_ELEMENT"


class UncoveredElement(ChromaChainError):
    code = "UNCOVERED_ELEMENT"


class UnknownSession(ChromaChainError):
    code = "UNKNOWN_SESSION"
