"""Exception types shared across the package."""


class OscnetError(Exception):
    """Base class for all package-specific errors."""


class ConnectivityError(OscnetError):
    """A graph operation could not produce or keep a connected graph."""


class EdgeEditError(OscnetError):
    """An edge add/remove precondition was violated."""


class UnstablePotentialError(OscnetError):
    """A potential matrix is not positive definite."""


class DecoupledNodeError(OscnetError):
    """A node's overlap with the requested mode is below the tuning threshold."""


class NoDetectableShiftError(OscnetError):
    """All mode frequency shifts are below the numerical floor."""


class EstimatorRangeError(OscnetError):
    """The detuning estimator was driven outside its domain."""


class ConfigError(OscnetError):
    """Invalid experiment configuration."""
