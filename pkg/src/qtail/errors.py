"""Exception types raised across the package."""


class QTailError(Exception):
    """Base class for every error raised by :mod:`qtail`."""


class DenominatorNotUnit(QTailError, ValueError):
    """A divisor's lowest coefficient is not +1 or -1.

    Every denominator in the formulas implemented here (Pochhammer symbols,
    products of unknot values, ``1 - q``) has a unit lowest coefficient, so
    hitting this almost always means a formula was transcribed wrongly.
    """


class SeriesDivisionByZero(QTailError, ZeroDivisionError):
    pass


class ZeroSeries(QTailError, ValueError):
    pass


class InsufficientTruncation(QTailError, ValueError):
    pass


class NonIntegerGridAfterNormalization(QTailError, ValueError):
    pass


class DivergentInfiniteProduct(QTailError, ValueError):
    pass


class NonConvergent(QTailError, ValueError):
    pass


class IndexOutOfRange(QTailError, ValueError):
    pass


class PreconditionViolated(QTailError, ValueError):
    pass


class NonMonotoneIndices(QTailError, ValueError):
    pass


class TooFewStrands(QTailError, ValueError):
    pass


class TooManyCrossings(QTailError, ValueError):
    pass


class MultiComponent(QTailError, ValueError):
    pass


class InvalidDiagram(QTailError, ValueError):
    pass
