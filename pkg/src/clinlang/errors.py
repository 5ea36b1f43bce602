"""Exception hierarchy with stable machine-readable error codes.

Every error raised by the toolkit carries a ``code`` string that is part of
the public API (the CLI and HTTP service surface it verbatim), a human
message, and an optional ``detail`` mapping.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit errors."""

    code = "internal-error"

    def __init__(self, message: str, *, detail: dict | None = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def to_dict(self) -> dict:
        d = {"code": self.code, "message": self.message}
        if self.detail:
            d["detail"] = self.detail
        return d


class InputError(ToolkitError):
    """User-supplied input is invalid (HTTP 4xx class)."""


class ResourceError(ToolkitError):
    """A language-pack or model resource is missing or malformed."""


class BackendError(ToolkitError):
    """A remote backend failed (HTTP 5xx class)."""


def _make(name: str, code: str, base: type = InputError) -> type:
    return type(name, (base,), {"code": code})


# textcore
UnknownLanguageError = _make("UnknownLanguageError", "unknown-language")
MalformedResourceError = _make("MalformedResourceError", "malformed-resource", ResourceError)
EmptyInputError = _make("EmptyInputError", "empty-input")
CapabilityError = _make("CapabilityError", "capability-error")

# morphosyntax
UnknownTagError = _make("UnknownTagError", "unknown-tag-in-corpus")
EmptyCorpusError = _make("EmptyCorpusError", "empty-corpus")
ZeroWordDocumentError = _make("ZeroWordDocumentError", "zero-word-document")

# phonlex
UnconvertibleWordError = _make("UnconvertibleWordError", "unconvertible-word")
NoNucleusError = _make("NoNucleusError", "no-nucleus")
ZeroConvertibleWordsError = _make("ZeroConvertibleWordsError", "zero-convertible-words")

# lexsem
ZeroWordsError = _make("ZeroWordsError", "zero-words")
InvalidWindowError = _make("InvalidWindowError", "invalid-window")
MalformedHeaderError = _make("MalformedHeaderError", "malformed-header")
DimensionMismatchError = _make("DimensionMismatchError", "dimension-mismatch")
DuplicateWordError = _make("DuplicateWordError", "duplicate-word")
OutOfVocabularyError = _make("OutOfVocabularyError", "out-of-vocabulary")
DegenerateVectorError = _make("DegenerateVectorError", "degenerate-vector")

# clinscore
EmptyTargetError = _make("EmptyTargetError", "empty-target")
UnknownSegmentError = _make("UnknownSegmentError", "unknown-segment")
MalformedRowError = _make("MalformedRowError", "malformed-row")

# acoustic
UnsupportedEncodingError = _make("UnsupportedEncodingError", "unsupported-encoding")
TruncatedFileError = _make("TruncatedFileError", "truncated-file")
EmptySignalError = _make("EmptySignalError", "empty-signal")
RateTooLowError = _make("RateTooLowError", "rate-too-low")
InvariantViolationError = _make("InvariantViolationError", "invariant-violation")
TextGridSyntaxError = _make("TextGridSyntaxError", "syntax-error")

# discourse
DiscourseLanguageError = _make(
    "DiscourseLanguageError", "language-not-supported-for-discourse"
)
BackendTimeoutError = _make("BackendTimeoutError", "backend-timeout", BackendError)
BackendUnreachableError = _make(
    "BackendUnreachableError", "backend-unreachable", BackendError
)
MalformedResponseError = _make(
    "MalformedResponseError", "malformed-response", BackendError
)
ConfigurationError = _make("ConfigurationError", "configuration-error")

# report
NoBlocksError = _make("NoBlocksError", "no-blocks")
