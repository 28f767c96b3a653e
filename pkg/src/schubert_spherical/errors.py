"""Exception hierarchy shared across the package."""


class SchubertError(Exception):
    """Base class for every error raised by this package."""


class ConstructionError(SchubertError, ValueError):
    """An invalid Cartan type, root, word or permutation was supplied."""


class SystemMismatchError(SchubertError, ValueError):
    """Two objects belong to different root systems."""


class NotARootError(SchubertError, ValueError):
    pass


class NotBiclosedError(SchubertError, ValueError):
    """Raised when a root subset is not the inversion set of any element.

    ``pair`` holds a violating pair of positive-root indices and ``side``
    says whether the pair lives in the set ("closed") or in its complement
    ("coclosed").
    """

    def __init__(self, message, pair=None, side=None):
        super().__init__(message)
        self.pair = pair
        self.side = side


class NotInQuotientError(SchubertError, ValueError):
    """An element was expected to be a minimal coset representative."""


class NotWeakBelowError(SchubertError, ValueError):
    pass


class ResourceCapError(SchubertError, RuntimeError):
    """An enumeration would exceed the configured element cap."""


class UnsupportedTypeError(SchubertError, ValueError):
    pass


class InternalInconsistencyError(SchubertError, AssertionError):
    """Two independent computations that must agree did not.

    This always indicates a bug, never bad input.
    """
