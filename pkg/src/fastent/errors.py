"""Exception hierarchy.

Every error raised on bad input derives from :class:`FastentError`. The CLI
maps :class:`DataError` subclasses to exit code 2 and :class:`IoFailure` to
exit code 3.
"""


class FastentError(Exception):
    """Base class for all package errors."""


class DataError(FastentError, ValueError):
    """Input is well-formed Python but violates a data contract."""


class EmptyInput(DataError):
    pass


class InvalidFrequency(DataError):
    pass


class InvalidInput(DataError):
    pass


class DegenerateCoverage(DataError):
    """Chao-Shen sample coverage is zero (every type is a hapax)."""


class CountersUnavailable(DataError):
    pass


class InsufficientData(DataError):
    pass


class UndefinedTau(DataError):
    """Kendall tau is undefined because one margin is constant."""


class InvalidMetric(DataError):
    pass


class EncodingError(DataError):
    pass


class MalformedLine(DataError):
    def __init__(self, line_no, reason, path=None):
        self.line_no = line_no
        self.reason = reason
        self.path = path
        where = f"{path}:{line_no}" if path is not None else f"line {line_no}"
        super().__init__(f"{where}: {reason}")


class IoFailure(FastentError, OSError):
    pass
