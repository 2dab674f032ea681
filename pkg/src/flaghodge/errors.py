"""Exception hierarchy shared by every flaghodge module."""


class FlagHodgeError(Exception):
    """Base class for all errors raised by flaghodge."""


class InvalidType(FlagHodgeError, ValueError):
    """A (cartan_type, rank) pair that names no simple root system."""


class InvalidLevi(FlagHodgeError, ValueError):
    """A node subset that is not a valid subset of the Dynkin diagram."""


class UnrecognizedDiagram(FlagHodgeError):
    """A connected Dynkin subdiagram that could not be classified."""


class EnumerationBudgetExceeded(FlagHodgeError):
    """An enumeration would visit more elements than the configured cap."""

    def __init__(self, requested, budget):
        self.requested = requested
        self.budget = budget
        super().__init__(
            f"enumeration of {requested} elements exceeds budget {budget}"
        )


class NonExactDivision(FlagHodgeError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, remainder, message=None):
        self.remainder = remainder
        super().__init__(message or f"division not exact, remainder {remainder}")


class RankMismatch(FlagHodgeError, ValueError):
    """Exponent multisets of G and H have different cardinalities."""


class NonIntegerEuler(FlagHodgeError, ArithmeticError):
    """The product formula for the Euler number did not give an integer."""


class OracleMismatch(FlagHodgeError):
    """Two independent computations of the same quantity disagree."""


class PreconditionViolated(FlagHodgeError, ValueError):
    """A check was invoked on a record that does not satisfy its hypothesis."""


class ParseError(FlagHodgeError, ValueError):
    """Malformed group expression; ``position`` is a 0-based column."""

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"at column {position}: expected {expected}\n  {text}\n  {' ' * position}^")


class RankError(InvalidType):
    """Well-formed expression naming a (type, rank) with no root system."""
