"""Exception types raised by the engine.

Every guard that "must never fire" on Dynkin input still raises a named
error so that the CLI can report it and the verification suite can treat
it as a failed check instead of a crash.
"""


class ClusterCatError(Exception):
    """Base class for domain errors."""


class InvalidType(ClusterCatError, ValueError):
    pass


class InvalidOrientation(ClusterCatError, ValueError):
    pass


class NoReduction(ClusterCatError):
    pass


class KnittingDiverged(ClusterCatError):
    pass


class NegativeHammock(ClusterCatError):
    pass


class NegativeExt(ClusterCatError):
    pass


class NoStabilization(ClusterCatError):
    pass


class SizeViolation(ClusterCatError):
    pass


class CountViolation(ClusterCatError):
    pass


class PreconditionViolated(ClusterCatError, ValueError):
    pass


class RotationNotFound(ClusterCatError):
    pass


class LaurentViolation(ClusterCatError):
    pass


class BudgetExceeded(ClusterCatError):
    pass
