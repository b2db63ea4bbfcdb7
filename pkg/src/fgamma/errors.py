"""Exception hierarchy shared by all evaluators."""


class FGammaError(Exception):
    """Base class for every error raised by :mod:`fgamma`."""


class DomainError(FGammaError, ValueError):
    """An argument lies outside the region where the quantity is defined."""


class PoleError(DomainError):
    """The requested point is a (candidate) pole.

    ``shift`` and ``root`` identify the vanishing factor when the pole was
    detected in a continuation chain ``B(s) B(s+1) ... B(s+n-1)``.
    """

    def __init__(self, message, shift=None, root=None):
        super().__init__(message)
        self.shift = shift
        self.root = root


class SingularPointError(PoleError):
    """A closed-form right-hand side is singular (e.g. ``sin(pi k s) = 0``)."""


class ConvergenceError(FGammaError, ArithmeticError):
    """An iterative or adaptive procedure failed to reach its tolerance."""


class EvaluationOverflow(FGammaError, OverflowError):
    """A value computed in log space does not fit in binary64."""
