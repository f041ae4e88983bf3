"""Exception types shared across the package."""


class OscbathError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameters(OscbathError, ValueError):
    """A system parameter set violates one of its constraints."""


class SteadyStateUnavailable(OscbathError):
    """The steady-state solve was rejected.

    A finite asymptotic covariance matrix is only computed for strictly
    stable dynamics, which requires lambda > 0 and |nu| strictly below
    omega1*omega2. Marginal parameter sets must use the rk4 integrator.
    """


class NonPhysicalInput(OscbathError, ValueError):
    """A covariance matrix has no real nonnegative symplectic spectrum."""


class DomainError(OscbathError, ValueError):
    """Argument below 1 passed to the bosonic entropy function."""


class DegenerateState(OscbathError):
    """Discord branch selection hit the singular denominator at det B = 1."""


class UnknownFigure(OscbathError, LookupError):
    """Requested figure preset id does not exist."""
