"""Exception hierarchy shared by all linkgap modules."""


class LinkgapError(Exception):
    """Base class for every error raised by linkgap."""


# complex construction and queries
class ComplexError(LinkgapError, ValueError):
    pass


class NonPureError(ComplexError):
    pass


class EmptyComplexError(ComplexError):
    pass


class DuplicateTopError(ComplexError):
    pass


class DimOutOfRange(ComplexError):
    pass


class UnknownFace(ComplexError, KeyError):
    pass


class TopFaceError(ComplexError):
    pass


# spectral
class LinkTooSmall(LinkgapError, ValueError):
    pass


class DisconnectedLink(LinkgapError, ValueError):
    def __init__(self, message, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class NotConverged(LinkgapError, RuntimeError):
    pass


# determinant polynomial / root problem
class BadDims(LinkgapError, ValueError):
    pass


class MissingS(LinkgapError, KeyError):
    pass


class NotSupported(LinkgapError, ValueError):
    pass


class EmptyKernel(LinkgapError, ValueError):
    pass


# criteria
class WrongDimension(LinkgapError, ValueError):
    pass


class BadLabel(LinkgapError, ValueError):
    pass


# cosine
class DegenerateDenominator(LinkgapError, ValueError):
    pass


class TooLarge(LinkgapError, ValueError):
    pass


class MissingCos(LinkgapError, KeyError):
    pass


# polygons
class BadGonality(LinkgapError, ValueError):
    pass


class BadParams(LinkgapError, ValueError):
    pass


class TooSmall(LinkgapError, ValueError):
    pass


class NotPrime(LinkgapError, ValueError):
    pass
