"""Exception hierarchy shared across the package."""


class ConvexAlgError(Exception):
    """Base class for all library errors."""


class OutOfRangeError(ConvexAlgError):
    """A probability lies outside [0, 1]."""


class ZeroDenominatorError(ConvexAlgError):
    """A rational was given denominator 0."""


class DimensionMismatchError(ConvexAlgError):
    """Binary operands have different shapes (dimension or alphabet)."""


class ArityMismatchError(ConvexAlgError):
    """A distribution's arity disagrees with the indexed family it weights."""


class InvalidDistributionError(ConvexAlgError):
    """Weights are negative or do not sum to exactly 1."""


class NegativeScaleError(ConvexAlgError):
    """A scaling coefficient is negative, or a scaled weight is not positive."""


class ZeroPointError(ConvexAlgError):
    """The zero scaled point carries no underlying point."""


class NotDominatedError(ConvexAlgError):
    """Q does not dominate P: some Q(a) = 0 with P(a) > 0."""


class DegenerateIntervalError(ConvexAlgError):
    """An interval has nonpositive width."""


class ParseError(ConvexAlgError):
    """Malformed textual or JSON input."""


class UnknownInstanceError(ConvexAlgError):
    """No registered convex-space instance under that name."""


class UnknownFunctionError(ConvexAlgError):
    """No catalog function under that name."""
