"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Two lattice objects do not live on the same N-point circle."""


class UnsupportedConfigurationError(ValueError):
    """The requested lattice is not supported (e.g. an even number of points)."""


class MathieuConvergenceError(RuntimeError):
    """The Fourier-coefficient tail did not decay below tolerance before the size cap."""


class DegenerateEigenvalueError(RuntimeError):
    """Two eigenvalues of a truncated Mathieu matrix are too close to order reliably."""


class InsufficientResolutionError(ValueError):
    """The lattice is too coarse for the requested order."""

    def __init__(self, message, min_points=None):
        super().__init__(message)
        self.min_points = min_points


class RadialConsistencyError(ArithmeticError):
    """A discrete radial value kept an imaginary part above tolerance."""


class SeriesRangeError(OverflowError):
    """A hyperbolic series overflows double precision at the requested argument."""

    def __init__(self, message, varrho=None):
        super().__init__(message)
        self.varrho = varrho


class DomainError(ValueError):
    """Parameter outside the domain where a constant is defined."""
