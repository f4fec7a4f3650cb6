"""Exception types shared across the package."""


class BallhullError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(BallhullError):
    """Non-finite coordinates, empty point sets, or malformed arguments."""


class NotStrictlyConvexError(BallhullError):
    """The norm plane is not strictly convex (p <= 1, p = inf, or non-finite)."""


class InvalidRadiusError(BallhullError):
    """A radius that must be positive is zero or negative."""


class CoincidentCentersError(BallhullError):
    """Circle intersection requested for two identical centers."""


class NoCommonDiscError(BallhullError):
    """Two points are farther than 2*radius apart, so no radius disc holds both."""


class DegenerateChordError(BallhullError):
    """An arc through two points was requested with the points coincident."""


class RadiusTooSmallError(BallhullError):
    """The requested radius is below the circumradius of the point set.

    Carries the empty ball-intersection boundary as ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoArcsError(BallhullError):
    """An operation needing boundary arcs got an Empty or SinglePoint region."""
