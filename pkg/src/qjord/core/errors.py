"""Exception hierarchy shared by every qjord module."""


class QjordError(Exception):
    """Base class; the CLI turns any of these into exit status 2."""


class ContextMismatch(QjordError):
    """Two values built under different scalar contexts were combined."""


class HalfPowerUnrepresentable(QjordError):
    """q^x is not a Laurent monomial in s for the current root degree."""


class PoleAtOne(QjordError):
    """A q → 1 limit does not exist (the reduced denominator vanishes at s = 1)."""

    def __init__(self, message: str, entry: tuple[int, int] | None = None):
        super().__init__(message)
        self.entry = entry


class NotNilpotent(QjordError):
    """A series argument failed the nilpotency check."""


class UnknownRep(QjordError):
    """Representation selector not in the catalog."""


class NotClosed(QjordError):
    """Brackets of the basis leave the span of the basis."""


class OrderUnavailable(QjordError):
    """A truncated series was requested beyond the known order."""


class UnknownFamily(QjordError):
    """Contraction family or map variant not registered."""


class EvaluationError(QjordError):
    """An expression could not be evaluated (inexact division, unassigned symbol, ...)."""


class QalgSyntaxError(QjordError):
    """Malformed .qalg text; carries the 1-based position and what was expected."""

    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        detail = f", found {found!r}" if found else ""
        super().__init__(f"line {line}, col {col}: expected {expected}{detail}")


class UndeclaredSymbol(QjordError):
    """Expression uses a symbol that is neither declared nor reserved."""


class ParityMismatch(QjordError):
    """Relation or coalgebra expression mixes parities."""


class UnknownPresentation(QjordError):
    """No built-in presentation with that name."""


class ExportBeforeLimit(QjordError):
    """A matrix still depending on s was handed to the exporter."""


class LedgerError(QjordError):
    """The discrepancy ledger file is unreadable or malformed."""
