"""Exception hierarchy shared by all rbx modules."""


class RbxError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(RbxError):
    """Division by the zero scalar (or a zero polynomial denominator)."""


class ParseError(RbxError):
    """Malformed coefficient expression.

    Carries the character position and a human-readable description of what
    was expected there.
    """

    def __init__(self, message, position=None, expected=None):
        super().__init__(message)
        self.position = position
        self.expected = expected


class UnknownParameter(ParseError):
    """A name in a coefficient expression is not declared in the ring."""

    def __init__(self, name, position=None):
        super().__init__(f"unknown parameter {name!r}", position=position)
        self.name = name


class ShapeMismatch(RbxError):
    """Tensor/matrix extents do not line up for the requested operation."""


class BadPermutation(RbxError):
    """Leg permutation is not a permutation of the tensor's legs."""


class ParameterDependentRank(RbxError):
    """A rank computation hit a pivot whose vanishing depends on parameters.

    The offending entry (the obstruction) is reported instead of guessing a
    generic verdict.
    """

    def __init__(self, row, col, entry):
        super().__init__(
            f"rank depends on parameters: obstruction entry at ({row}, {col}) is {entry}"
        )
        self.row = row
        self.col = col
        self.entry = entry


class MissingCounit(RbxError):
    """A check required a counit but the coalgebra does not carry one."""


class MissingUnit(RbxError):
    """A check required a unit but the algebra does not carry one."""


class PreconditionFailed(RbxError):
    """A construction's hypothesis check failed.

    ``report`` holds the inner CheckReport that diagnoses which hypothesis
    broke.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotCoalgebraMap(PreconditionFailed):
    """The supplied matrix does not intertwine the two comultiplications."""


class CorpusIntegrityError(RbxError):
    """A bundled corpus file failed to parse or violates its own invariants."""
