"""Domain-specific exceptions shared across the package."""


class QuantrepError(Exception):
    """Base class for all errors raised by this package."""


class AtypicalColor(QuantrepError):
    """A color lies in Z \\ rZ, where the r-dimensional simple module degenerates."""


class InadmissibleSixJ(QuantrepError):
    """6j-symbol arguments violate the integrality/ordering fusion constraints."""


class ColorSumNonzero(QuantrepError):
    """The four puncture colors do not sum to zero."""


class DegenerateParameter(QuantrepError):
    """A parameter sits at a degenerate value (A = 0 or A^2 = 1)."""


class ParseError(QuantrepError):
    """A word failed to parse; carries the offending token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position
