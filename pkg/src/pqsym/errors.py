"""Exception hierarchy shared by all pqsym modules."""


class PQSymError(Exception):
    """Base class for domain errors raised by pqsym."""


class DegreeMismatch(PQSymError, ValueError):
    pass


class BasisMismatch(PQSymError, ValueError):
    pass


class NotInCatalanSpan(PQSymError, ValueError):
    """An F-basis combination is not constant on non-decreasing rearrangement classes."""


class ResourceBoundExceeded(PQSymError, RuntimeError):
    """A computation would exceed the configured degree or enumeration limit."""


class InvalidWord(PQSymError, ValueError):
    pass
