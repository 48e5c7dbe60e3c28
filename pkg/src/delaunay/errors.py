"""Exception hierarchy shared by all modules."""


class DelaunayError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(DelaunayError, ValueError):
    """Invalid input parameters (conic axes, domains, grid sizes)."""


class DegenerateError(DelaunayError):
    """Degenerate geometry: vanishing tangent or irregular profile jet."""


class QuadratureError(DelaunayError):
    """Adaptive quadrature hit its subdivision cap.

    ``estimate`` and ``error_estimate`` carry the best value reached.
    """

    def __init__(self, message, estimate=float("nan"), error_estimate=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class BracketError(DelaunayError, ValueError):
    """A 1-D root search was given an interval without a sign change."""


class SingularJacobianError(DelaunayError):
    """Newton iteration met a (numerically) singular Jacobian."""


class ConvergenceError(DelaunayError):
    """An iterative solve stopped without meeting its tolerance.

    ``result`` holds the last iterate (a ``RootResult`` or ``FitResult``).
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class AssemblyError(DelaunayError):
    """Composite profile pieces could not be joined within tolerance."""

    def __init__(self, message, gap=float("nan")):
        super().__init__(message)
        self.gap = gap
