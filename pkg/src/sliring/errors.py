"""Exception hierarchy shared by the library and the CLI."""


class SliRingError(Exception):
    """Base class for every error raised by sliring."""


class ConstructionError(SliRingError, ValueError):
    """Invalid parameters for a fuzzy number, grid or trapezoid."""


class DomainError(SliRingError, ValueError):
    """An operation was called outside its domain."""


class SliError(SliRingError):
    """A candidate basis is not strongly linearly independent."""


class BasisMismatchError(SliRingError, ValueError):
    """Operands do not live over the same basis."""


class NoInverseError(SliRingError, ZeroDivisionError):
    """The element has zero core, so it has no multiplicative inverse."""


class ParseError(SliRingError, ValueError):
    """Input document is malformed or violates its schema."""
