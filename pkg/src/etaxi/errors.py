"""Exception types raised by the etaxi toolkit."""


class EtaXiError(Exception):
    """Base class for all toolkit errors."""


class NonFinite(EtaXiError, ValueError):
    """A NaN or infinite value was passed where a finite number is required."""


class OnLightCone(EtaXiError, ValueError):
    """The point lies on (or numerically too close to) the cone xi^2 - eta^2 = 0."""


class NearCone(OnLightCone):
    """A finite-difference stencil came too close to the cone."""


class Overflow(EtaXiError, OverflowError):
    """An exponential left the double-precision envelope."""


class DomainEdge(EtaXiError, ValueError):
    """A finite-difference stencil left the domain of a curve."""


class InvalidParam(EtaXiError, ValueError):
    """A construction parameter is out of range."""
