"""The 2-center problem with constrained circles: centers in K, fixed radii.

For each candidate big-disc center p, the points left uncovered form the
ordered set U; a valid small-disc center is any point of K inside the ball
intersection bi(U, lam2).  The march over the sorted points keeps the two
boundary arcs spanning the current abscissa, so the inner test is linear
and the whole solver quadratic.
"""

from dataclasses import dataclass, field

from . import _kernels
from .chains import build_ball_intersection, sort_points
from .errors import InvalidInputError
from .norms import Point, validate_plane

# Closed-disc slack: points within this relative band of a radius count as covered.
COVER_BAND = 1e-9


@dataclass(frozen=True)
class TwoCenterAnswer:
    """Outcome of a constrained 2-center instance.

    When feasible, the big disc (radius r) sits at ``big_center`` and the
    small disc (radius lam2) at ``small_center``; a degenerate one-disc
    solution sets ``single_disc``.  When infeasible, ``uncovered_witness``
    holds the far set U of the best candidate (the one covering the most
    points) and ``witness_center`` that candidate.
    """

    feasible: bool
    big_center: Point | None = None
    small_center: Point | None = None
    uncovered_witness: tuple = ()
    witness_center: Point | None = None
    single_disc: bool = False
    stats: dict = field(default_factory=dict, compare=False)


def far_set(plane, K_sorted, p: Point, r: float) -> list[Point]:
    """Order-preserving subsequence of K_sorted farther than r from p."""
    validate_plane(plane)
    band = COVER_BAND * r
    out = []
    for q in K_sorted:
        if _kernels.lp_norm(q[0] - p[0], q[1] - p[1], plane.p) > r + band:
            out.append(q)
    return out


def _march_small_center(plane, boundary, K_sorted, band, counters):
    """First point of K inside the region, sweeping each chain arc once."""
    if boundary.is_empty:
        return None
    lam = boundary.radius
    tol = band * lam
    if boundary.is_single_point:
        cx, cy = boundary.point
        for q in K_sorted:
            if _kernels.lp_norm(q[0] - cx, q[1] - cy, plane.p) <= tol:
                return q
        return None
    p = plane.p
    upper = boundary.upper_spans
    lower = boundary.lower_spans
    a, b = boundary.x_range
    iu = il = 0
    for q in K_sorted:
        x, y = q
        if x < a - tol or x > b + tol:
            continue
        while iu < len(upper) - 1 and upper[iu][1] < x:
            iu += 1
            counters["arc_advances"] += 1
        while il < len(lower) - 1 and lower[il][1] < x:
            il += 1
            counters["arc_advances"] += 1
        yu = _kernels.upper_y(upper[iu][2], upper[iu][3], lam, p, min(max(x, a), b))
        yl = _kernels.lower_y(lower[il][2], lower[il][3], lam, p, min(max(x, a), b))
        if yl - tol <= y <= yu + tol:
            return q
    return None


def solve_constrained_two_center(plane, K, r: float, lam2: float) -> TwoCenterAnswer:
    """Cover K by a radius-r disc and a radius-lam2 disc centered at points of K.

    Candidates are scanned in sorted order; the first feasible pair wins and
    the small center is the leftmost qualifying point, so the answer is
    deterministic.  Requires r >= lam2 > 0.
    """
    validate_plane(plane)
    if not (lam2 > 0.0) or not (r >= lam2):
        raise InvalidInputError(f"radii must satisfy r >= lam2 > 0, got r={r}, lam2={lam2}")
    pts = sort_points(K)
    if not pts:
        raise InvalidInputError("two-center needs at least one point")
    counters = {"arc_advances": 0, "arcs_total": 0, "candidates": 0}
    best_witness = None
    for p_center in pts:
        counters["candidates"] += 1
        U = far_set(plane, pts, p_center, r)
        if not U:
            return TwoCenterAnswer(True, big_center=p_center, small_center=p_center,
                                   single_disc=True, stats=counters)
        region = build_ball_intersection(plane, U, lam2)
        if region.is_region:
            counters["arcs_total"] += len(region.upper_spans) + len(region.lower_spans)
        q = _march_small_center(plane, region, pts, COVER_BAND, counters)
        if q is not None:
            return TwoCenterAnswer(True, big_center=p_center, small_center=q,
                                   stats=counters)
        if best_witness is None or len(U) < len(best_witness[1]):
            best_witness = (p_center, U)
    return TwoCenterAnswer(False, uncovered_witness=tuple(best_witness[1]),
                           witness_center=best_witness[0], stats=counters)


def coverage_check(plane, K, r, lam2, big_center, small_center,
                   band: float = COVER_BAND) -> bool:
    """Every point of K within r of the big center or lam2 of the small one."""
    validate_plane(plane)
    for q in K:
        db = _kernels.lp_norm(q[0] - big_center[0], q[1] - big_center[1], plane.p)
        ds = _kernels.lp_norm(q[0] - small_center[0], q[1] - small_center[1], plane.p)
        if db > r + band * max(r, lam2) and ds > lam2 + band * max(r, lam2):
            return False
    return True
