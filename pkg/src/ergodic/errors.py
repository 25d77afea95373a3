"""Exception hierarchy shared by all modules.

Failures are reported through distinct exception types so callers can
tell "the bound could not be established" apart from "the bound is
negative"; the dimension search in particular branches on this.
"""


class ErgodicError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(ErgodicError, ValueError):
    """A run parameter violates its documented constraint."""


class InvalidBallError(ErgodicError, ArithmeticError):
    """A ball operation left the operation's domain (e.g. division by an
    enclosure containing zero, log of an enclosure touching zero), or an
    enclosure became non-finite."""


class BranchCutError(InvalidBallError):
    """A complex enclosure intersects the principal branch cut (-inf, 0]."""


class ConvergenceError(ErgodicError):
    """Power iteration failed to converge within its iteration cap."""


class NonPositiveEigenfunctionError(ErgodicError):
    """The candidate eigenfunction could not be verified strictly positive,
    so no min-max bound can be certified at the current rank."""


class BracketError(ErgodicError):
    """The initial bisection bracket failed its rigorous sign check."""


class RankExhaustedError(ErgodicError):
    """The dimension search exceeded its approximation-rank cap."""


class PrecisionInsufficientError(ErgodicError):
    """Certified endpoints crossed; the working precision (or the
    approximation ranks) cannot support the requested accuracy."""
