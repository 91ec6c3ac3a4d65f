from enum import Enum


class PreferenceDomainError(Exception):
    """Base class for every error raised by the toolbox."""


class InvalidArgumentError(PreferenceDomainError, ValueError):
    """An argument is outside the domain of the operation (bad id, size mismatch, n too small)."""


class PreconditionViolatedError(PreferenceDomainError, ValueError):
    """The input is well-formed but lacks a property the operation requires (e.g. not SPN)."""


class ResourceBoundError(PreferenceDomainError, RuntimeError):
    """The request exceeds a configured desk-scale bound."""


class InternalInvariantError(PreferenceDomainError, ArithmeticError):
    """An internal consistency check failed. Never expected on valid inputs."""


class ParseErrorCode(Enum):
    MISSING_HEADER = "missing-header"
    MALFORMED_INTEGER = "malformed-integer"
    NOT_A_PERMUTATION = "not-a-permutation"
    COUNT_MISMATCH = "count-mismatch"
    ROW_LENGTH_MISMATCH = "row-length-mismatch"
    INVALID_TABLEAU = "invalid-tableau"
    INVALID_ENCODING = "invalid-encoding"


class DocumentParseError(PreferenceDomainError, ValueError):
    def __init__(self, code: ParseErrorCode, message: str, line: int = None, column: int = None):
        self.code = code
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"[{code.value}] {message}{location}")
