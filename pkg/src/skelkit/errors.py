"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation received arguments outside its mathematical domain."""


class UnsupportedCenterError(DomainError):
    """A blow-up center violates the restrictions of the combinatorial transform."""


class ModelFormatError(ValueError):
    """A model document could not be parsed.  Carries a human-readable location."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
