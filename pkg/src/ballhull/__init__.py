"""Ball hulls and ball intersections in strictly convex normed planes.

Finite point sets in the Lp plane (1 < p < inf): ball intersections and
ball hulls with circular-arc boundaries, circumradius and Chebyshev sets,
and the 2-center problem with constrained circles, each backed by a
brute-force oracle.
"""

from ._kernels import available_backends, backend_name, use_backend
from .arcs import (
    Arc,
    Location,
    Membership,
    arc_point_at_x,
    arc_sample,
    arc_x_range,
    circle_circle_intersection,
    disc_membership,
    minimal_arcs,
)
from .chains import (
    ArcWithCenter,
    BoundaryKind,
    ChainBoundary,
    boundary_membership,
    build_ball_intersection,
    chain_arc_centers,
    region_margin,
    sample_boundary,
    sort_points,
    validate_boundary,
)
from .chebyshev import CircumResult, circumradius, diameter, monotonicity_check
from .errors import (
    BallhullError,
    CoincidentCentersError,
    DegenerateChordError,
    InvalidInputError,
    InvalidRadiusError,
    NoArcsError,
    NoCommonDiscError,
    NotStrictlyConvexError,
    RadiusTooSmallError,
)
from .hull import (
    HullAlgorithm,
    HullReport,
    build_ball_hull,
    build_ball_hull_dc,
    hull_contains_hull,
    outer_common_tangents,
)
from .norms import EUCLIDEAN, NormPlane, norm_eval, sphere_point, validate_plane
from .oracle import (
    oracle_bh_membership,
    oracle_bi_membership,
    oracle_circumradius,
    oracle_two_center,
)
from .two_center import TwoCenterAnswer, far_set, solve_constrained_two_center

__version__ = "0.1.0"

__all__ = [
    "Arc", "ArcWithCenter", "BoundaryKind", "ChainBoundary", "CircumResult",
    "HullAlgorithm", "HullReport", "Location", "Membership", "NormPlane",
    "EUCLIDEAN", "TwoCenterAnswer",
    "arc_point_at_x", "arc_sample", "arc_x_range", "available_backends",
    "backend_name", "boundary_membership", "build_ball_hull",
    "build_ball_hull_dc", "build_ball_intersection", "chain_arc_centers",
    "circle_circle_intersection", "circumradius", "diameter",
    "disc_membership", "far_set", "hull_contains_hull", "minimal_arcs",
    "monotonicity_check", "norm_eval", "oracle_bh_membership",
    "oracle_bi_membership", "oracle_circumradius", "oracle_two_center",
    "outer_common_tangents", "region_margin", "sample_boundary",
    "solve_constrained_two_center", "sort_points", "sphere_point",
    "use_backend", "validate_boundary", "validate_plane",
    "BallhullError", "CoincidentCentersError", "DegenerateChordError",
    "InvalidInputError", "InvalidRadiusError", "NoArcsError",
    "NoCommonDiscError", "NotStrictlyConvexError", "RadiusTooSmallError",
]
