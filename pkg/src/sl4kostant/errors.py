"""Exception types shared across the package."""


class NonIntegral(ValueError):
    """A weight has no integer coordinates in the requested basis."""


class NegativeInput(ValueError):
    """A counting function received a negative coordinate."""


class PreconditionViolated(ValueError):
    """An argument falls outside the domain a closed formula is valid on."""
