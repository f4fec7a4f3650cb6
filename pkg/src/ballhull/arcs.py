"""Circle intersections, disc membership and minimal circular arcs.

An Arc is a piece of a radius-lam circle, stored counterclockwise in the
radial sphere parametrization.  All builders in the package sit on the
operations here.
"""

import math
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .errors import (
    CoincidentCentersError,
    DegenerateChordError,
    InvalidRadiusError,
    NoCommonDiscError,
)
from .norms import NormPlane, Point, require_finite, sphere_point, validate_plane

TWO_PI = 2.0 * math.pi

# Default boundary band for membership classification, relative to the radius.
DEFAULT_BAND = 1e-9

# Arcs with angular extent below this are dropped by the chain builders.
MIN_ARC_EXTENT = 1e-10


class Location(Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Membership:
    """Classification of a point against a region plus its signed margin."""

    location: Location
    margin: float

    @property
    def covered(self) -> bool:
        return self.location is not Location.OUTSIDE


def classify(margin: float, band: float, lam: float) -> Membership:
    if margin < -band * lam:
        return Membership(Location.INSIDE, margin)
    if margin <= band * lam:
        return Membership(Location.ON_BOUNDARY, margin)
    return Membership(Location.OUTSIDE, margin)


def theta_of(center: Point, pt: Point) -> float:
    """Parameter angle of a circle point: direction of the ray center -> pt."""
    th = math.atan2(pt[1] - center[1], pt[0] - center[0])
    return th % TWO_PI


@dataclass(frozen=True)
class Arc:
    """Counterclockwise circular arc from theta_start to theta_end.

    theta_end - theta_start lies in (0, 2*pi]; extent 2*pi is a full circle.
    Endpoints are cached so chain neighbors can share vertex objects exactly.
    """

    plane: NormPlane
    center: Point
    radius: float
    theta_start: float
    theta_end: float
    start_point: Point
    end_point: Point

    @property
    def extent(self) -> float:
        return self.theta_end - self.theta_start

    @property
    def is_full_circle(self) -> bool:
        return self.extent >= TWO_PI - 1e-15


def make_arc(plane, center, radius, theta_start, theta_end,
             start_point=None, end_point=None) -> Arc:
    """Build an Arc, normalizing angles; extent 0 is read as a full circle."""
    if not (radius > 0.0):
        raise InvalidRadiusError(f"radius {radius} must be positive")
    ts = theta_start % TWO_PI
    ext = (theta_end - theta_start) % TWO_PI
    if ext == 0.0:
        ext = TWO_PI
    te = ts + ext
    if start_point is None:
        start_point = sphere_point(plane, center, radius, ts)
    if end_point is None:
        end_point = start_point if ext == TWO_PI else sphere_point(plane, center, radius, te)
    return Arc(plane, tuple(center), radius, ts, te, tuple(start_point), tuple(end_point))


def full_circle(plane, center, radius) -> Arc:
    return make_arc(plane, center, radius, 0.0, TWO_PI)


def circle_circle_intersection(plane, c1: Point, c2: Point, lam: float,
                               tol: float = 1e-10) -> list[Point]:
    """All points at norm distance lam from both centers, ccw around c1.

    Empty when the centers are more than 2*lam apart; a single point (the
    segment midpoint, forced by strict convexity) at distance 2*lam; two
    points otherwise.  Roots closer than the tangency band merge.
    """
    validate_plane(plane)
    if not (lam > 0.0):
        raise InvalidRadiusError(f"radius {lam} must be positive")
    require_finite(c1[0], c1[1], c2[0], c2[1], lam)
    if c1[0] == c2[0] and c1[1] == c2[1]:
        raise CoincidentCentersError("coincident centers: every radius circle or none")
    n, x1, y1, x2, y2 = _kernels.circle_intersections(
        float(c1[0]), float(c1[1]), float(c2[0]), float(c2[1]), float(lam), plane.p)
    if n == 0:
        return []
    if n == 1:
        return [(x1, y1)]
    pts = [(x1, y1), (x2, y2)]
    pts.sort(key=lambda w: theta_of(c1, w))
    return pts


def disc_membership(plane, center: Point, lam: float, q: Point,
                    band: float = DEFAULT_BAND) -> Membership:
    """Classify q against the closed disc B(center, lam) with a boundary band."""
    validate_plane(plane)
    if not (lam > 0.0):
        raise InvalidRadiusError(f"radius {lam} must be positive")
    if band < 0.0:
        raise InvalidRadiusError(f"band {band} must be nonnegative")
    require_finite(q[0], q[1])
    margin = _kernels.lp_norm(float(q[0]) - center[0], float(q[1]) - center[1], plane.p) - lam
    return classify(margin, band, lam)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def minimal_arcs(plane, p_pt: Point, q_pt: Point, lam: float) -> list[Arc]:
    """The one or two minimal arcs of radius lam meeting two points.

    Each circle through both points yields the arc lying in the half-plane
    of the chord that does not contain the circle's center.  At separation
    exactly 2*lam the two arcs are the two half-circles.
    """
    validate_plane(plane)
    if p_pt[0] == q_pt[0] and p_pt[1] == q_pt[1]:
        raise DegenerateChordError("minimal arcs need two distinct points")
    d = _kernels.lp_norm(q_pt[0] - p_pt[0], q_pt[1] - p_pt[1], plane.p)
    if d > 2.0 * lam * (1.0 + 1e-12):
        raise NoCommonDiscError(f"points are {d} apart, farther than 2*lam = {2 * lam}")
    centers = circle_circle_intersection(plane, p_pt, q_pt, lam)
    out = []
    if len(centers) == 1:
        x = centers[0]
        th_p = theta_of(x, p_pt)
        th_q = theta_of(x, q_pt)
        out.append(make_arc(plane, x, lam, th_p, th_q, p_pt, q_pt))
        out.append(make_arc(plane, x, lam, th_q, th_p, q_pt, p_pt))
        return out
    for x in centers:
        th_p = theta_of(x, p_pt)
        th_q = theta_of(x, q_pt)
        cand = make_arc(plane, x, lam, th_p, th_q, p_pt, q_pt)
        mid = sphere_point(plane, x, lam, cand.theta_start + 0.5 * cand.extent)
        if _cross(p_pt, q_pt, mid) * _cross(p_pt, q_pt, x) > 0.0:
            cand = make_arc(plane, x, lam, th_q, th_p, q_pt, p_pt)
        out.append(cand)
    return out


def arc_sample(arc: Arc, k: int) -> list[Point]:
    """k+1 points at evenly spaced parameter values; endpoints exact."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    pts = [arc.start_point]
    for i in range(1, k):
        th = arc.theta_start + arc.extent * (i / k)
        pts.append(sphere_point(arc.plane, arc.center, arc.radius, th))
    pts.append(arc.end_point)
    return pts


def _x_at(arc: Arc, theta: float) -> float:
    return _kernels.sphere_point_xy(arc.center[0], arc.center[1], arc.radius,
                                    theta, arc.plane.p)[0]


def _monotone_pieces(arc: Arc):
    """Split the parameter range at multiples of pi, where x(theta) turns."""
    lo, hi = arc.theta_start, arc.theta_end
    cuts = [lo]
    k = math.floor(lo / math.pi) + 1
    while k * math.pi < hi - 1e-15:
        if k * math.pi > lo + 1e-15:
            cuts.append(k * math.pi)
        k += 1
    cuts.append(hi)
    return list(zip(cuts[:-1], cuts[1:]))


def arc_x_range(arc: Arc) -> tuple[float, float]:
    """Extent of the arc along the x axis."""
    xs = [arc.start_point[0], arc.end_point[0]]
    for th_lo, th_hi in _monotone_pieces(arc):
        xs.append(_x_at(arc, th_lo))
        xs.append(_x_at(arc, th_hi))
    return min(xs), max(xs)


def arc_point_at_x(arc: Arc, x0: float) -> list[Point]:
    """Points of the arc at abscissa x0, one per x-monotone piece hit.

    x(theta) is strictly monotone between turnings of the strictly convex
    circle, so plain bisection locates each hit.
    """
    require_finite(x0)
    hits = []
    for th_lo, th_hi in _monotone_pieces(arc):
        x_lo = _x_at(arc, th_lo)
        x_hi = _x_at(arc, th_hi)
        if not (min(x_lo, x_hi) <= x0 <= max(x_lo, x_hi)):
            continue
        decreasing = x_lo >= x_hi
        lo, hi = th_lo, th_hi
        for _ in range(80):
            if hi - lo <= 1e-14:
                break
            mid = 0.5 * (lo + hi)
            if (_x_at(arc, mid) >= x0) == decreasing:
                lo = mid
            else:
                hi = mid

        th = 0.5 * (lo + hi)
        pt = sphere_point(arc.plane, arc.center, arc.radius, th)
        if not any(abs(pt[0] - h[0]) < 1e-12 * arc.radius
                   and abs(pt[1] - h[1]) < 1e-12 * arc.radius for h in hits):
            hits.append(pt)
    return hits
