"""Exception hierarchy shared by all diagtorus modules."""


class DiagTorusError(Exception):
    """Base class for all diagtorus errors."""


class DimensionMismatch(DiagTorusError):
    """Operands live in different ambient dimensions."""


class RankDeficient(DiagTorusError):
    """A full-row-rank matrix was required."""


class NotUnimodular(DiagTorusError):
    """A matrix with determinant +-1 was required."""


class ZeroVector(DiagTorusError):
    """A nonzero weight vector was required."""


class NotPrimitive(DiagTorusError):
    """A weight vector with coprime entries was required."""


class NotInGroup(DiagTorusError):
    """The one-parameter subgroup exponents do not satisfy <d, l> = 0."""


class TooLarge(DiagTorusError):
    """The requested brute-force enumeration exceeds the desk-scale budget."""
