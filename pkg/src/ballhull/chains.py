"""Ball intersections bi(K, lam) as upper/lower chains of circular arcs.

The boundary of an intersection of equal-radius discs splits at its leftmost
and rightmost points into an upper and a lower chain.  Over the common
x-domain the upper chain is the lower envelope of the discs' upper boundary
graphs, which are horizontal translates of one strictly concave function, so
any two of them cross at most once and the envelope is built by one
left-to-right pass: each new disc's arc enters at the left end of the chain,
possibly removing previously added arcs.  The lower chain is the mirrored
pass.  After both passes the region is the x-interval where the upper
envelope clears the lower one.
"""

import bisect
import math
from dataclasses import dataclass, field
from enum import Enum

from . import _kernels
from .arcs import (
    DEFAULT_BAND,
    MIN_ARC_EXTENT,
    Arc,
    Location,
    Membership,
    classify,
    make_arc,
)
from .errors import InvalidInputError, InvalidRadiusError, NoArcsError
from .norms import NormPlane, Point, validate_plane

# Region thinner than this (relative to lam) collapses to a single point;
# upper envelope below lower by more than this means an empty intersection.
POINT_BAND = 1e-9

# Zero-width guards for arc spans created by clipping and exact ties.
_WIDTH_EPS = 1e-13


class BoundaryKind(Enum):
    EMPTY = "empty"
    SINGLE_POINT = "single_point"
    REGION = "region"


@dataclass(frozen=True)
class ArcWithCenter:
    """A boundary arc together with the input point whose circle carries it."""

    arc: Arc
    generating_center: Point


@dataclass(frozen=True)
class ChainBoundary:
    """Boundary of a convex region bounded by equal-radius arcs.

    ``upper`` and ``lower`` hold the chains left to right; ``vertices`` walks
    the arc endpoints counterclockwise starting at the leftmost point.
    ``corners`` keeps only the genuine vertices where two circles with
    different centers meet (the vertex set fed to the hull builder).
    """

    kind: BoundaryKind
    radius: float
    plane: NormPlane | None = None
    point: Point | None = None
    upper: tuple = ()
    lower: tuple = ()
    vertices: tuple = ()
    corners: tuple = ()
    upper_spans: tuple = field(default=(), repr=False)
    lower_spans: tuple = field(default=(), repr=False)

    @property
    def is_empty(self):
        return self.kind is BoundaryKind.EMPTY

    @property
    def is_single_point(self):
        return self.kind is BoundaryKind.SINGLE_POINT

    @property
    def is_region(self):
        return self.kind is BoundaryKind.REGION

    @property
    def leftmost(self) -> Point:
        if self.is_region:
            return self.vertices[0]
        if self.is_single_point:
            return self.point
        raise NoArcsError("empty boundary has no extreme points")

    @property
    def rightmost(self) -> Point:
        if self.is_region:
            return self.upper[-1].arc.start_point
        if self.is_single_point:
            return self.point
        raise NoArcsError("empty boundary has no extreme points")

    @property
    def x_range(self):
        return self.leftmost[0], self.rightmost[0]

    def generating_centers(self):
        """Distinct generating centers, chain order, upper then lower."""
        seen = []
        for awc in self.upper + self.lower:
            if awc.generating_center not in seen:
                seen.append(awc.generating_center)
        return seen


def empty_boundary(radius: float) -> ChainBoundary:
    return ChainBoundary(BoundaryKind.EMPTY, radius)


def single_point_boundary(point: Point, radius: float,
                          plane: NormPlane | None = None) -> ChainBoundary:
    return ChainBoundary(BoundaryKind.SINGLE_POINT, radius, plane=plane,
                         point=tuple(point), vertices=(tuple(point),))


def sort_points(K) -> list[Point]:
    """Lexicographic (x, then y) order with exact duplicates removed."""
    pts = set()
    for q in K:
        x, y = float(q[0]), float(q[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidInputError(f"non-finite point ({q[0]!r}, {q[1]!r})")
        pts.add((x, y))
    return sorted(pts)


def _upper_envelope(pts, lam, p):
    """Lower envelope of the upper disc boundaries, one left-to-right pass.

    ``pts`` must be x-nondecreasing.  Returns the arc stack (rightmost arc
    first, entries [cx, cy, s, sy] where (s, sy) is the arc's left vertex)
    and the fixed right end of the common domain, or None when the common
    x-domain vanishes.
    """
    kern = _kernels
    x0, y0 = pts[0]
    dhi = x0 + lam
    stack = [[x0, y0, x0 - lam, y0]]
    for qx, qy in pts[1:]:
        dlo = qx - lam
        if dlo > dhi:
            return None, dhi
        while len(stack) > 1 and stack[-2][2] <= dlo:
            stack.pop()
        top = stack[-1]
        if top[2] < dlo:
            top[2] = dlo
            top[3] = kern.upper_y(top[0], top[1], lam, p, dlo)
        # The new disc contributes iff its boundary is the lowest at the
        # left edge of the shrunken domain ({u_q <= envelope} is always a
        # left interval of the domain).
        if qy >= kern.upper_y(top[0], top[1], lam, p, dlo):
            continue
        while stack:
            top = stack[-1]
            e_top = stack[-2][2] if len(stack) > 1 else dhi
            found, wx, wy = kern.upper_crossing(top[0], top[1], qx, qy, lam, p)
            if found:
                if wx >= e_top:
                    stack.pop()
                    continue
                if wx > top[2] + _WIDTH_EPS * lam:
                    top[2] = wx
                    top[3] = wy
                    stack.append([qx, qy, dlo, qy])
                break
            # No graph crossing: one boundary is below the other throughout.
            xm = 0.5 * (top[2] + e_top)
            if kern.upper_y(qx, qy, lam, p, xm) < kern.upper_y(top[0], top[1], lam, p, xm):
                stack.pop()
                continue
            break
        if not stack:
            stack.append([qx, qy, dlo, qy])
    return stack, dhi


def _stack_to_pieces(stack, dhi, lam, p, negate_y):
    """Explode the envelope stack into (cx, cy, lv, rv) pieces left to right."""
    sgn = -1.0 if negate_y else 1.0
    cx0, cy0, _, _ = stack[0]
    rv = (dhi, sgn * _kernels.upper_y(cx0, cy0, lam, p, dhi))
    pieces = []
    for cx, cy, s, sy in stack:
        lv = (s, sgn * sy)
        pieces.append([cx, sgn * cy, lv, rv])
        rv = lv
    pieces.reverse()
    return pieces


def _piece_y(piece, lam, p, x, lower):
    cx, cy = piece[0], piece[1]
    if lower:
        return _kernels.lower_y(cx, cy, lam, p, x)
    return _kernels.upper_y(cx, cy, lam, p, x)


class _Envelope:
    """Point evaluation of a piecewise-arc envelope by binary search."""

    def __init__(self, pieces, lam, p, lower):
        self.pieces = pieces
        self.starts = [pc[2][0] for pc in pieces]
        self.lam = lam
        self.p = p
        self.lower = lower

    def piece_at(self, x):
        i = bisect.bisect_right(self.starts, x) - 1
        if i < 0:
            i = 0
        return self.pieces[i]

    def __call__(self, x):
        return _piece_y(self.piece_at(x), self.lam, self.p, x, self.lower)


def _theta_upper(center, pt):
    dy = pt[1] - center[1]
    if dy < 0.0:
        dy = 0.0
    return math.atan2(dy, pt[0] - center[0])


def _theta_lower(center, pt):
    dy = pt[1] - center[1]
    if dy > 0.0:
        dy = 0.0
    th = math.atan2(dy, pt[0] - center[0])
    return th + 2.0 * math.pi


def _clip_pieces(pieces, a, b, pa, pb, lam):
    out = []
    for cx, cy, lv, rv in pieces:
        if rv[0] <= a + _WIDTH_EPS * lam or lv[0] >= b - _WIDTH_EPS * lam:
            continue
        nlv = pa if lv[0] < a + _WIDTH_EPS * lam else lv
        nrv = pb if rv[0] > b - _WIDTH_EPS * lam else rv
        out.append([cx, cy, nlv, nrv])
    if out:
        out[0][2] = pa
        out[-1][3] = pb
    return out


def _merge_tiny_pieces(pieces, lam):
    """Fold degenerate slivers (endpoints closer than 1e-12*lam) into a neighbor."""
    if len(pieces) <= 1:
        return pieces
    out = []
    pending_lv = None
    for cx, cy, lv, rv in pieces:
        if pending_lv is not None:
            lv = pending_lv
            pending_lv = None
        if math.hypot(rv[0] - lv[0], rv[1] - lv[1]) <= 1e-12 * lam:
            if out:
                out[-1][3] = rv
            else:
                pending_lv = lv
            continue
        out.append([cx, cy, lv, rv])
    if not out:
        return [pieces[0]]
    if pending_lv is not None:
        out[0][2] = pending_lv
    return out


def _build_region(plane, lam, upper_pieces, lower_pieces):
    upper_pieces = _merge_tiny_pieces(upper_pieces, lam)
    lower_pieces = _merge_tiny_pieces(lower_pieces, lam)
    upper = []
    for cx, cy, lv, rv in upper_pieces:
        arc = make_arc(plane, (cx, cy), lam, _theta_upper((cx, cy), rv),
                       _theta_upper((cx, cy), lv), start_point=rv, end_point=lv)
        upper.append(ArcWithCenter(arc, (cx, cy)))
    lower = []
    for cx, cy, lv, rv in lower_pieces:
        arc = make_arc(plane, (cx, cy), lam, _theta_lower((cx, cy), lv),
                       _theta_lower((cx, cy), rv), start_point=lv, end_point=rv)
        lower.append(ArcWithCenter(arc, (cx, cy)))

    p0 = upper_pieces[0][2]
    pm = upper_pieces[-1][3]
    up_internal = [pc[2] for pc in upper_pieces[1:]]
    lo_internal = [pc[2] for pc in lower_pieces[1:]]
    vertices = [p0] + lo_internal + [pm] + list(reversed(up_internal))

    # a breakpoint is a genuine corner only when the adjacent circles differ
    corners = []
    for pieces in (upper_pieces, lower_pieces):
        for left, right in zip(pieces, pieces[1:]):
            if (left[0], left[1]) != (right[0], right[1]):
                corners.append(right[2])
    if (upper[0].generating_center != lower[0].generating_center):
        corners.append(p0)
    if (upper[-1].generating_center != lower[-1].generating_center):
        corners.append(pm)
    corners = sorted(set(map(tuple, corners)))

    up_spans = tuple((pc[2][0], pc[3][0], pc[0], pc[1]) for pc in upper_pieces)
    lo_spans = tuple((pc[2][0], pc[3][0], pc[0], pc[1]) for pc in lower_pieces)
    return ChainBoundary(
        BoundaryKind.REGION, lam, plane=plane,
        upper=tuple(upper), lower=tuple(lower),
        vertices=tuple(map(tuple, vertices)), corners=tuple(corners),
        upper_spans=up_spans, lower_spans=lo_spans)


def _single_disc_region(plane, center, lam):
    cx, cy = center
    lv = (cx - lam, cy)
    rv = (cx + lam, cy)
    piece = [cx, cy, lv, rv]
    return _build_region(plane, lam, [list(piece)], [list(piece)])


def _refine_end_vertex(plane, lam, up_piece, lo_piece, x_est, y_est, left_end):
    """Exact coordinates for a chain endpoint.

    When the same circle carries both envelopes there, the endpoint is that
    circle's horizontal extreme; otherwise it is an intersection point of
    the two carrying circles, refined by the circle kernel (uniformly
    accurate, unlike y-from-x evaluation near a vertical tangency).
    """
    ucx, ucy = up_piece[0], up_piece[1]
    lcx, lcy = lo_piece[0], lo_piece[1]
    if ucx == lcx and ucy == lcy:
        return (ucx - lam, ucy) if left_end else (ucx + lam, ucy)
    n, x1, y1, x2, y2 = _kernels.circle_intersections(ucx, ucy, lcx, lcy, lam, plane.p)
    best = None
    for px, py in ((x1, y1), (x2, y2))[:n]:
        d2 = (px - x_est) ** 2 + (py - y_est) ** 2
        if best is None or d2 < best[0]:
            best = (d2, (px, py))
    if best is None:
        return (x_est, y_est)
    return best[1]


def build_ball_intersection(plane, K, lam: float) -> ChainBoundary:
    """Boundary of the intersection of radius-lam discs centered at K.

    Empty when lam is below the circumradius of K; a single point at the
    tangency threshold; otherwise a region whose chains list the arcs left
    to right with their generating centers right to left.
    """
    validate_plane(plane)
    if not (lam > 0.0):
        raise InvalidRadiusError(f"radius {lam} must be positive")
    pts = sort_points(K)
    if not pts:
        raise InvalidInputError("ball intersection needs at least one point")
    p = plane.p
    if len(pts) == 1:
        return _single_disc_region(plane, pts[0], lam)
    dlo = pts[-1][0] - lam
    dhi = pts[0][0] + lam
    if dlo > dhi:
        return empty_boundary(lam)

    ustack, _ = _upper_envelope(pts, lam, p)
    if ustack is None:
        return empty_boundary(lam)
    mirrored = [(x, -y) for x, y in pts]
    lstack, _ = _upper_envelope(mirrored, lam, p)
    if lstack is None:
        return empty_boundary(lam)

    upper_pieces = _stack_to_pieces(ustack, dhi, lam, p, negate_y=False)
    lower_pieces = _stack_to_pieces(lstack, dhi, lam, p, negate_y=True)
    env_u = _Envelope(upper_pieces, lam, p, lower=False)
    env_l = _Envelope(lower_pieces, lam, p, lower=True)

    def gap(x):
        return env_u(x) - env_l(x)

    lo, hi = dlo, dhi
    for _ in range(70):
        if hi - lo <= 1e-14 * max(1.0, lam):
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if gap(m1) < gap(m2):
            lo = m1
        else:
            hi = m2
    x_star = 0.5 * (lo + hi)
    peak = gap(x_star)

    band = POINT_BAND * lam
    if peak < -band:
        return empty_boundary(lam)
    if peak <= band:
        return single_point_boundary((x_star, 0.5 * (env_u(x_star) + env_l(x_star))),
                                     lam, plane=plane)

    def zero_between(xneg, xpos):
        # gap(xneg) <= 0 <= gap(xpos); bisect toward the sign change
        for _ in range(80):
            if abs(xpos - xneg) <= 1e-14 * max(1.0, lam):
                break
            mid = 0.5 * (xneg + xpos)
            if gap(mid) < 0.0:
                xneg = mid
            else:
                xpos = mid
        return 0.5 * (xneg + xpos)

    a_est = dlo if gap(dlo) >= -1e-12 * lam else zero_between(dlo, x_star)
    b_est = dhi if gap(dhi) >= -1e-12 * lam else zero_between(dhi, x_star)

    pa = _refine_end_vertex(plane, lam, env_u.piece_at(a_est), env_l.piece_at(a_est),
                            a_est, 0.5 * (env_u(a_est) + env_l(a_est)), left_end=True)
    pb = _refine_end_vertex(plane, lam, env_u.piece_at(b_est), env_l.piece_at(b_est),
                            b_est, 0.5 * (env_u(b_est) + env_l(b_est)), left_end=False)
    if pb[0] - pa[0] <= _WIDTH_EPS * lam:
        return single_point_boundary((0.5 * (pa[0] + pb[0]), 0.5 * (pa[1] + pb[1])),
                                     lam, plane=plane)

    up = _clip_pieces(upper_pieces, pa[0], pb[0], pa, pb, lam)
    lo_ = _clip_pieces(lower_pieces, pa[0], pb[0], pa, pb, lam)
    if not up or not lo_:
        return single_point_boundary(pa, lam, plane=plane)
    return _build_region(plane, lam, up, lo_)


def chain_arc_centers(boundary: ChainBoundary):
    """Generating centers of the upper and lower chains in arc order."""
    if not boundary.is_region:
        raise NoArcsError("boundary has no arcs (empty or a single point)")
    return ([awc.generating_center for awc in boundary.upper],
            [awc.generating_center for awc in boundary.lower])


def region_margin(plane, boundary: ChainBoundary, q: Point) -> float:
    """Signed margin of q: max over generating discs of (distance - radius).

    Negative inside the region, positive outside.  The region equals the
    intersection of its generating discs, so this is exact up to kernels.
    """
    if boundary.is_empty:
        return math.inf
    if boundary.is_single_point:
        return _kernels.lp_norm(q[0] - boundary.point[0], q[1] - boundary.point[1],
                                plane.p)
    lam = boundary.radius
    best = -math.inf
    for cx, cy in boundary.generating_centers():
        m = _kernels.lp_norm(q[0] - cx, q[1] - cy, plane.p) - lam
        if m > best:
            best = m
    return best


def boundary_membership(plane, boundary: ChainBoundary, q: Point,
                        band: float = DEFAULT_BAND) -> Membership:
    """Classify q against the region, band relative to the radius.

    Outside whenever q's abscissa misses the region's x-range; otherwise the
    classification agrees with disc membership against every generating
    center, which is what the margin encodes.
    """
    if boundary.is_empty:
        raise InvalidInputError("membership in an empty boundary is undefined")
    if boundary.is_single_point:
        m = region_margin(plane, boundary, q)
        loc = Location.ON_BOUNDARY if m <= band * boundary.radius else Location.OUTSIDE
        return Membership(loc, m)
    return classify(region_margin(plane, boundary, q), band, boundary.radius)


def sample_boundary(boundary: ChainBoundary, per_arc: int = 64):
    """Counterclockwise boundary samples: lower chain then upper chain."""
    if boundary.is_empty:
        return []
    if boundary.is_single_point:
        return [boundary.point]
    from .arcs import arc_sample

    pts = []
    for awc in boundary.lower:
        pts.extend(arc_sample(awc.arc, per_arc)[:-1])
    for awc in reversed(boundary.upper):
        pts.extend(arc_sample(awc.arc, per_arc)[1:])
    if len(pts) > 1 and pts[-1] == pts[0]:
        pts.pop()
    return pts


def validate_boundary(plane, boundary: ChainBoundary, per_arc: int = 64) -> None:
    """Assert the structural invariants of a region boundary.

    Endpoints sit on their circles, neighbors share vertex coordinates, the
    chains share their extreme points, and the sampled counterclockwise walk
    only turns left (cross products above -1e-12).
    """
    if not boundary.is_region:
        return
    lam = boundary.radius
    for chain in (boundary.upper, boundary.lower):
        for awc in chain:
            arc = awc.arc
            for pt in (arc.start_point, arc.end_point):
                r = _kernels.lp_norm(pt[0] - arc.center[0], pt[1] - arc.center[1],
                                     plane.p)
                if abs(r - lam) > 1e-10 * lam:
                    raise AssertionError(f"arc endpoint off its circle by {r - lam}")
        for left, right in zip(chain, chain[1:]):
            shared_l = left.arc.start_point if chain is boundary.upper else left.arc.end_point
            shared_r = right.arc.end_point if chain is boundary.upper else right.arc.start_point
            dx = shared_l[0] - shared_r[0]
            dy = shared_l[1] - shared_r[1]
            if math.hypot(dx, dy) > 1e-9 * lam:
                raise AssertionError("adjacent arcs do not share an endpoint")
    up_l = boundary.upper[0].arc.end_point
    lo_l = boundary.lower[0].arc.start_point
    up_r = boundary.upper[-1].arc.start_point
    lo_r = boundary.lower[-1].arc.end_point
    if up_l != lo_l or up_r != lo_r:
        raise AssertionError("chains do not share their extreme vertices")

    pts = sample_boundary(boundary, per_arc)
    n = len(pts)
    for i in range(n):
        o = pts[i]
        a = pts[(i + 1) % n]
        b = pts[(i + 2) % n]
        cr = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
        if cr < -1e-12:
            raise AssertionError(f"non-convex turn (cross product {cr})")
