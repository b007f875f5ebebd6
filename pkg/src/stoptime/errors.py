"""Exception types shared across the package."""


class StoptimeError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatchError(StoptimeError):
    """Objects built over different sample spaces, grids or atom sets."""


class RejectedInputError(StoptimeError):
    """A structurally valid input fails an operation's mathematical precondition."""


class ResourceCapError(StoptimeError):
    """An exhaustive enumeration would exceed the configured resource cap."""


class DocumentError(StoptimeError):
    """A document cannot be parsed or does not resolve internally."""
