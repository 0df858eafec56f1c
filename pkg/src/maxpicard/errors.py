"""Exception hierarchy shared by every module."""


class MaxPicardError(Exception):
    """Base class for all domain errors raised by the package."""


class IncompatibleLatticeError(MaxPicardError, ValueError):
    """Two divisor classes live on different base surfaces."""


class UnsupportedSurfaceError(MaxPicardError, ValueError):
    """The operation is not implemented for the given base surface."""


class GermError(MaxPicardError, ValueError):
    """A germ violates a precondition (unit germ, zero polynomial, bad text)."""


class TransportShapeError(MaxPicardError, ValueError):
    """A singularity transport rule was applied to an input of the wrong shape."""


class BuildingDataError(MaxPicardError, ValueError):
    """Building data is inconsistent (non-integral chi, failed identities, ...)."""


class ParameterError(MaxPicardError, ValueError):
    """Construction parameters violate the family constraints."""


class RegionError(MaxPicardError, ValueError):
    """A geography pair lies outside the region an operation requires."""


class ArrangementError(MaxPicardError, ValueError):
    """Degenerate projective geometry (equal points, shared components, ...)."""


class InfiniteContactError(ArrangementError):
    """Two curves share a component through the point being examined."""


class InconsistencyError(MaxPicardError, RuntimeError):
    """An internal cross-check failed; indicates a census or invariant bug."""
