"""Exception hierarchy shared by the library and the command line."""


class SolowSwanError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SolowSwanError, ValueError):
    """An argument lies outside the domain where the model is defined."""


class NumericalError(SolowSwanError, ArithmeticError):
    """A numerical procedure failed to deliver a trustworthy value."""


class ConvergenceError(NumericalError):
    """An iterative procedure stopped before meeting its tolerance.

    ``estimate`` and ``error`` carry the best value reached and its
    estimated error, so callers can still inspect partial progress.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class BlowUpError(NumericalError):
    """The integrated solution escaped to infinity or the step size underflowed."""

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class PositivityError(NumericalError):
    """A solution left the positive orthant where the model lives."""

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class ScenarioError(SolowSwanError, ValueError):
    """A scenario document is malformed or violates a parameter constraint."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key
