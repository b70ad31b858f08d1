"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or an operation given inconsistent input."""


class ParseError(GraphError):
    """Malformed graph text. ``line`` is 1-based, or None for whole-input problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphMismatchError(GraphError):
    """A vertex set, edge set or matching belongs to a different graph."""


class NotMaximumError(GraphError):
    """A matching passed as maximum admits an augmenting path."""

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(message)


class PreconditionError(GraphError):
    """An operation's stated precondition does not hold for its input."""


class BudgetExceeded(RuntimeError):
    """An enumeration hit its item cap or its deadline.

    ``produced`` counts the items yielded before the budget ran out.
    """

    def __init__(self, what, produced, reason="limit"):
        self.what = what
        self.produced = produced
        self.reason = reason
        super().__init__(f"{what}: budget exceeded ({reason}) after {produced} items")


class RecognizerDisagreement(AssertionError):
    """Two K-E recognizers returned different verdicts for the same graph."""

    def __init__(self, verdicts, report=None):
        self.verdicts = dict(verdicts)
        self.report = report
        super().__init__(f"recognizer verdicts disagree: {self.verdicts}")
