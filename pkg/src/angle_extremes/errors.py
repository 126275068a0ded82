"""Exception types raised by the geometry and analysis routines."""


class AngleExtremesError(Exception):
    """Base class for every error raised by this package."""


class DomainError(AngleExtremesError, ValueError):
    """Input lies outside the domain of a geometric operation."""


class CoincidentPoints(DomainError):
    pass


class DegenerateVertex(DomainError):
    """The vertex of an angle coincides with one of its arms."""


class DegenerateTriangle(DomainError):
    pass


class AllCollinear(DomainError):
    """Every point of a planar configuration lies on a single line (or geodesic)."""


class BoundaryViolation(DomainError):
    """A hyperbolic point sits on or outside the boundary of the unit disk."""


class NotRegular(DomainError):
    pass


class TheoremViolation(AngleExtremesError):
    """A configuration produced a minimum angle above the pi/n bound.

    This never fires for correct code; the offending configuration is kept
    on the exception so it can be inspected or dumped.
    """

    def __init__(self, message, config=None):
        super().__init__(message)
        self.config = config
