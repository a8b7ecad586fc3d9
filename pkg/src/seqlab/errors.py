"""Exception hierarchy shared by every seqlab module."""


class SeqlabError(Exception):
    pass


class BudgetExceeded(SeqlabError):
    """A computation would exceed its configured desk-scale budget."""


class CapacityExceeded(BudgetExceeded):
    """A prime query reaches beyond the configured sieve capacity."""


class InsufficientWidth(SeqlabError):
    pass


class ConstructionError(SeqlabError):
    pass


class SingularSystem(SeqlabError):
    pass


class RecurrenceViolation(SeqlabError):
    pass


class ParseError(SeqlabError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DuplicateId(SeqlabError):
    pass
