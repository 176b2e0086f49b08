class FactorizationOverflow(ValueError):
    """Raised when an integer is outside the supported factorization range."""

    def __init__(self, value: int):
        super().__init__(f"|{value}| is outside the supported factorization range (< 2**63)")
        self.value = value


class NoRepresentation(ValueError):
    """A decomposition solver was called on a target outside its admissible set."""


class NotAMember(ValueError):
    def __init__(self, value: int, reason: str):
        super().__init__(f"{value} is not an attainable determinant value: {reason}")
        self.value = value
        self.reason = reason


class InternalMismatch(RuntimeError):
    """A constructed witness failed re-evaluation. Always a bug."""
