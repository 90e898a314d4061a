"""Exception hierarchy.

Every error raised on purpose by this package derives from
:class:`SignedGraphError`, itself a ``ValueError``.
"""


class SignedGraphError(ValueError):
    """Base class for all package errors."""


class DuplicateEdge(SignedGraphError):
    pass


class LoopEdge(SignedGraphError):
    pass


class VertexOutOfRange(SignedGraphError):
    pass


class InvalidSign(SignedGraphError):
    pass


class SizeLimitExceeded(SignedGraphError):
    """Input is larger than the documented bound of an exhaustive routine."""


class NonSquare(SignedGraphError):
    pass


class NonSymmetric(SignedGraphError):
    pass


class InconsistentOrientation(SignedGraphError):
    pass


class OddOrder(SignedGraphError):
    pass


class EdgeCollision(SignedGraphError):
    pass


class TooSmall(SignedGraphError):
    pass


class AdjacentPair(SignedGraphError):
    pass


class Disconnected(SignedGraphError):
    pass


class ZeroP(SignedGraphError):
    pass


class BadK(SignedGraphError):
    pass


class NegativeLaplacianEigenvalue(SignedGraphError):
    pass


class BalancedWithoutZero(SignedGraphError):
    pass


class NotUnbalancedUnicyclic(SignedGraphError):
    pass


class IndexOutOfRange(SignedGraphError):
    pass
