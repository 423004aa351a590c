"""Exception types shared across the package."""


class GaussSteerError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(GaussSteerError):
    """Matrix or vector shapes are inconsistent with the mode partition."""


class NotHermitianError(GaussSteerError):
    """Input claimed Hermitian/symmetric deviates beyond the allowed tolerance."""


class SingularBlockError(GaussSteerError):
    """A block that must be inverted is numerically singular."""


class InvalidParameterError(GaussSteerError):
    """Scalar parameters violate their documented constraints."""


class InvalidStateError(GaussSteerError):
    """Covariance matrix fails the physicality test."""


class InvalidChannelError(GaussSteerError):
    """Channel matrices fail the complete-positivity test."""


class InvalidSuperchannelError(GaussSteerError):
    """Superchannel matrices fail their admissibility conditions."""
