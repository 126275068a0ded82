"""Minimum angles of point configurations in the Euclidean and hyperbolic planes."""

from .analysis import (
    AngleReport,
    VerificationSummary,
    WitnessCertificate,
    constructive_witness,
    min_angle,
    regularity_score,
    verify_theorem,
)
from .configuration import Configuration
from .errors import (
    AllCollinear,
    AngleExtremesError,
    BoundaryViolation,
    CoincidentPoints,
    DegenerateTriangle,
    DegenerateVertex,
    DomainError,
    NotRegular,
    TheoremViolation,
)
from .euclidean import angle_at, convex_hull, regular_ngon, regular_simplex
from .hyperbolic import (
    disk_for_area,
    hyp_angle_at,
    hyp_distance,
    inscribed_regular_ngon,
    triangle_report,
    validate_ngon,
)

__version__ = "0.1.0"
