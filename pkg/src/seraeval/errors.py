"""Exception hierarchy shared by all modules."""


class SeraEvalError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(SeraEvalError, ValueError):
    pass


class InvalidStateError(SeraEvalError, RuntimeError):
    pass


class IndexingError(SeraEvalError):
    pass


class UnsupportedFormatError(SeraEvalError):
    pass


class IntegrityError(SeraEvalError):
    pass


class NotFoundError(SeraEvalError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class EmptyQueryError(SeraEvalError):
    pass


class AnalyzerMismatchError(SeraEvalError):
    """Query-time analyzer options differ from the ones the index was built with."""


class UndefinedCorrelationError(SeraEvalError, ValueError):
    """Correlation requested on a constant (zero-variance) vector."""
