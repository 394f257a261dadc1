"""Exception hierarchy for the toolkit."""


class OhmRushError(Exception):
    """Base class for all toolkit errors."""


class NonPrimeModulus(OhmRushError):
    pass


class InfiniteColength(OhmRushError):
    pass


class UnknownVariable(OhmRushError):
    pass


class BudgetExceeded(OhmRushError):
    pass


class RingMismatch(OhmRushError):
    pass


class FieldMismatch(OhmRushError):
    pass


class SemigroupMismatch(OhmRushError):
    pass


class UnsupportedRing(OhmRushError):
    pass


class NotLocal(OhmRushError):
    pass


class IsGorenstein(OhmRushError):
    pass


class ConfigError(OhmRushError):
    pass


class InvariantViolation(OhmRushError):
    """An identity that must hold unconditionally was observed to fail."""


class ParseError(OhmRushError):
    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
