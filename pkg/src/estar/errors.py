"""Exception hierarchy shared by every module."""


class EstarError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EstarError, ValueError):
    """Malformed input: loops, duplicate edges, unparseable files."""


class DomainError(EstarError, ValueError):
    """Input is well formed but outside the operation's mathematical domain."""


class ResourceLimitError(EstarError, RuntimeError):
    """An enumeration would exceed its configured cap."""
