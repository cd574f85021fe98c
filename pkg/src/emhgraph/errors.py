"""Exception types shared across the package."""


class EMHError(Exception):
    """Base class for all library errors."""


class DomainError(EMHError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class GraphParseError(EMHError, ValueError):
    """An edge-list line could not be parsed, or describes a self-loop."""

    def __init__(self, message, lineno=None, line=None):
        self.lineno = lineno
        self.line = line
        if lineno is not None:
            message = f"line {lineno}: {message}"
            if line is not None:
                message += f": {line.rstrip()!r}"
        super().__init__(message)


class ResourceLimitError(EMHError, RuntimeError):
    """A configured size cap (oracle vertex cap, nonzero cap) was exceeded."""


class PreconditionError(EMHError, ValueError):
    """An input violates a documented precondition of an operation."""


class TorsionWarning(UserWarning):
    """Rank over the rationals and rank modulo a prime disagree."""
