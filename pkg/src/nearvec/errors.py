"""Exception types shared across the package."""


class NearVecError(ValueError):
    """Base class for all errors raised by this package."""


class BaseMismatchError(NearVecError):
    """A scalar or automorphism does not belong to the expected base."""


class BoundExceededError(NearVecError):
    """An exhaustive sweep would exceed its configured size bound."""


class UnsupportedBaseError(NearVecError):
    """The operation needs an enumerable base and got an infinite one."""


class InvalidAnchorError(NearVecError):
    """The anchor vector is zero or lies outside the quasi-kernel."""
