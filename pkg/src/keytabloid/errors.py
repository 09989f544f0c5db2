class KeyTabloidError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KeyTabloidError, ValueError):
    """An argument lies outside the domain of an operation."""


class UnreachableError(KeyTabloidError):
    """A composition is not in the affine orbit of its minimal element."""


class InvalidInput(KeyTabloidError, ValueError):
    """A tabloid handed to a crystal operator is not semistandard."""


class DecompositionError(KeyTabloidError):
    """A graded character failed to split into key polynomials."""
