"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed or out-of-domain input."""


class NormalizationError(ValidationError):
    """A vector that must have unit norm does not."""


class ResourceGuardError(RuntimeError):
    """The requested computation exceeds a configured size guard."""


class NotFrustrationFreeError(ValidationError):
    """The Hamiltonian has no zero-energy ground state."""
