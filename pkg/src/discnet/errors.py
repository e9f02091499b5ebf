"""Exception hierarchy shared by all workbench modules.

Every error raised on purpose derives from :class:`WorkbenchError` so CLI and
HTTP layers can map failures to exit codes / status codes uniformly.  The
``code`` attribute is a stable machine-readable slug used in API error bodies.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all expected failures."""

    code = "error"

    def __init__(self, message: str, *, line: int | None = None):
        super().__init__(message)
        self.message = message
        # 1-based input line number when the failure is tied to a file location
        self.line = line

    def detail(self) -> dict:
        d: dict = {}
        if self.line is not None:
            d["line"] = self.line
        return d


class CorpusFormatError(WorkbenchError):
    """Malformed transcript CSV: bad header, missing column, bad cell."""

    code = "corpus-format"


class EncodingError(CorpusFormatError):
    """Input bytes are not valid UTF-8."""

    code = "encoding"


class IntegrityError(WorkbenchError):
    """Data violates a structural invariant (ids, dimensions, references)."""

    code = "integrity"


class EmptyCorpusError(WorkbenchError):
    """Operation requires at least one discourse unit."""

    code = "empty-corpus"


class EmptyVocabularyError(WorkbenchError):
    """Operation requires at least one target word."""

    code = "empty-vocabulary"


class StepRangeError(WorkbenchError):
    """Requested step k is outside [0, number of units]."""

    code = "step-out-of-range"


class ParameterError(WorkbenchError):
    """Unknown metric/mode/category or an out-of-range scalar argument."""

    code = "bad-parameter"


class SampleSizeError(WorkbenchError):
    """A statistics routine received fewer values than it needs."""

    code = "sample-size"


class PairingError(WorkbenchError):
    """Paired statistics received vectors of different lengths."""

    code = "pairing"


class DegenerateVarianceError(WorkbenchError):
    """A t statistic is undefined because the relevant variance is zero."""

    code = "degenerate-variance"


class SheetPreconditionError(WorkbenchError):
    """Sheet-derived analysis requested before the sheet is fit for it."""

    code = "sheet-precondition"


class SessionNotFoundError(WorkbenchError):
    """No session with the given id exists in the store."""

    code = "session-not-found"
