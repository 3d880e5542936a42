"""Exception types shared across the toolkit."""


class MixedFieldsError(ValueError):
    """A scalar of one coefficient field was handed to another."""


class MixedRingsError(ValueError):
    """Operands live in different ambient rings (variable count or field)."""


class ParseError(ValueError):
    """Malformed form text; carries the offending character position."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    """A variable index at or beyond the declared variable count."""


class NotHomogeneousError(ValueError):
    """Terms of unequal total degree in a single form."""


class ZeroFormError(ValueError):
    """A nonzero form was required."""


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where exactness was required."""


class HypothesisError(ValueError):
    """A restriction-check hypothesis (degree or codimension bound) fails."""


class PreconditionError(ValueError):
    """An input tuple violates a stated precondition; names the failed one."""


class RealizationGapError(RuntimeError):
    """Some target h-vector values could not be certified within budget."""

    def __init__(self, gaps, certificates):
        self.gaps = list(gaps)
        self.certificates = dict(certificates)
        super().__init__(f"unrealized degree-2 values: {self.gaps}")


class IncompleteTableError(ValueError):
    """The bound table does not cover the requested codimension range."""


class CorruptCacheError(ValueError):
    """The cache file is not syntactically valid."""
