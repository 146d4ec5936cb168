"""Exception types raised by leafkernel."""


class LeafError(Exception):
    """Base class for all leafkernel errors."""


class DomainError(LeafError, ValueError):
    """An argument lies outside the domain of the requested function."""


class ArgumentRangeError(LeafError, ValueError):
    """An argument is too large for argument reduction to stay accurate."""


class BracketError(LeafError, ValueError):
    """The target value is not enclosed by the supplied bracket."""


class ConvergenceError(LeafError, ArithmeticError):
    """An iterative method stopped before reaching its tolerance.

    Attributes:
        estimate: best value available when iteration stopped.
        error_bound: estimated absolute error of ``estimate``.
    """

    def __init__(self, message, estimate=float("nan"), error_bound=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class StiffnessError(LeafError, RuntimeError):
    """The ODE integrator's step size underflowed."""


class PeriodDetectionError(LeafError, RuntimeError):
    """No return to the initial state was found within the search horizon."""


class IdentityViolation(LeafError, AssertionError):
    """A symbolic identity left a nonzero remainder.

    Attributes:
        report: the :class:`~leafkernel.symbolic.ProofReport` that failed.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
