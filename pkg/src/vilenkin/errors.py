"""Exception types shared across the package."""


class VilenkinError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGroupError(VilenkinError, ValueError):
    """Radix sequence is not a valid bounded-group description."""


class IndexOverflowError(VilenkinError, OverflowError):
    """An integer index falls outside the representable range of the group."""


class ShapeMismatchError(VilenkinError, ValueError):
    """Operands live on different groups or at different resolutions."""


class DomainError(VilenkinError, ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class RangeError(VilenkinError, ValueError):
    """An index parameter is out of the valid range."""


class DegenerateWeightsError(VilenkinError, ValueError):
    """A weight sequence has a vanishing normalizer."""


class InvalidParamsError(VilenkinError, ValueError):
    """Construction parameters are inconsistent."""


class AtomError(VilenkinError, ValueError):
    """Base class for atom validation failures."""


class AtomMeanError(AtomError):
    """Candidate atom has nonzero mean over its support interval."""


class AtomBoundError(AtomError):
    """Candidate atom exceeds the sup-norm bound mu(I)^(-1/p)."""


class AtomSupportError(AtomError):
    """Candidate atom is nonzero outside its support interval."""
