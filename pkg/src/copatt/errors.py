"""Exception types shared across the package."""


class ResourceCapError(RuntimeError):
    """An exhaustive enumeration was asked for beyond the configured cap."""


class OutOfClassError(ValueError):
    """A bijection received an object outside its domain."""


class CapMismatchError(ValueError):
    """Two truncated series with different truncation caps were combined."""
