"""Exception types raised by journalcomp."""


class JournalcompError(Exception):
    """Base class for all journalcomp errors."""


class DimensionError(JournalcompError):
    """Inputs have incompatible or non-square shapes."""


class DomainError(JournalcompError):
    """A scalar argument is outside its mathematical domain."""


class CsvParseError(JournalcompError):
    """A delimited input file is malformed.

    ``line`` is the 1-based line number of the offending row, or None when
    the problem is not attributable to a single line.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(JournalcompError):
    """A structurally well-formed dataset violates a semantic constraint."""
