"""Error types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class EnvelopeError(DomainError):
    """A census request exceeds the supported enumeration envelope."""
