"""Exception types shared across the package."""


class StarkitError(Exception):
    """Base class for all package errors."""


class DomainError(StarkitError, ValueError):
    """A parameter or argument lies outside the operation's domain."""


class StructureError(StarkitError):
    """A construction violated a structural property it is supposed to guarantee.

    Raised by certificate builders; it signals a generator bug, not bad input.
    """


class ResourceError(StarkitError):
    """A search exceeded its configured node budget before finishing."""


class OracleTimeout(StarkitError):
    """The exact oracle ran past its wall-clock limit."""
