"""Exception types shared across the package."""


class MatroidLabError(Exception):
    """Base class for all matroidlab errors."""


class ParseError(MatroidLabError):
    """A text-format file could not be parsed."""


class ZeroInverse(MatroidLabError):
    """Attempted to invert the zero element of a field."""


class DimensionMismatch(MatroidLabError):
    """Operands have incompatible shapes."""


class ElementOutOfRange(MatroidLabError):
    """A set refers to an element outside the ground set."""


class NotABase(MatroidLabError):
    """The given set is not a base of the matroid."""


class ElementInBase(MatroidLabError):
    """The element must lie outside the given base."""


class ElementNotInBase(MatroidLabError):
    """The element must lie inside the given base."""


class NotACircuit(MatroidLabError):
    """The given set is not a circuit of the matroid."""


class ElementsNotInCircuit(MatroidLabError):
    """The given elements are not a valid pair inside the circuit."""


class NotAMinorCircuit(MatroidLabError):
    """The given set is not a circuit of the stated minor."""


class NotAPartition(MatroidLabError):
    """The given sets do not partition the ground set."""


class GroundTooLarge(MatroidLabError):
    """The ground set exceeds the size limit for an exhaustive check."""


class NotAMatroid(MatroidLabError):
    """An explicit independence family violates the matroid axioms."""


class InvalidOperator(MatroidLabError):
    """An operator table is not extensive or not monotone."""
