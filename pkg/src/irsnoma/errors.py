"""Exception types shared across the simulator."""


class SimulatorError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SimulatorError, ValueError):
    """Configuration value or constraint violation (CLI exit code 1)."""


class DomainError(SimulatorError, ValueError):
    """Numeric argument outside the physical domain (CLI exit code 3)."""


class DimensionError(DomainError):
    """Vector arguments disagree in length or shape."""


class InfeasibleGeometryError(DomainError):
    """Requested placement admits no 3D solution."""
