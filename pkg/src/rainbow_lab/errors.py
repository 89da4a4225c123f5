"""Exception hierarchy shared by the whole package."""


class RainbowLabError(Exception):
    """Base class for all package-specific errors."""


class InputError(RainbowLabError, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedCaseError(RainbowLabError):
    """The requested value is outside the implemented formula range.

    Raised for rb(Z_{2^a}, 2), which must come from an injected table (or the
    small-exponent search fallback) rather than a closed form.
    """


class ConfigError(RainbowLabError):
    """A required configuration artifact (e.g. the k=2 value table) is missing or invalid."""


class ConstructionError(RainbowLabError):
    """A witness builder produced a coloring that failed its own verification.

    This indicates a bug, not bad input; constructions never return unverified
    colorings.
    """


class CertificateError(RainbowLabError, ValueError):
    """A certificate file is malformed or not in canonical form."""

    def __init__(self, message: str, hint: str | None = None):
        super().__init__(message)
        self.hint = hint
