"""Ball hulls bh(K, lam), built two independent ways.

The primary builder uses the hull/intersection duality: bh(K, lam) equals
the ball intersection of the vertices of bi(K, lam).  The cross-check
builder merges sub-hulls bottom-up over a balanced split of the sorted
points, joining sibling hulls with the two outer common tangent arcs found
by a rolling two-index walk.  Both produce the same region; the test suite
holds them against each other.
"""

import math
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .arcs import (
    Arc,
    Location,
    arc_x_range,
    circle_circle_intersection,
    disc_membership,
    make_arc,
    theta_of,
)
from .chains import (
    BoundaryKind,
    ChainBoundary,
    build_ball_intersection,
    single_point_boundary,
    sort_points,
    _build_region,
    _single_disc_region,
)
from .errors import InvalidInputError, InvalidRadiusError, RadiusTooSmallError
from .norms import NormPlane, Point, validate_plane

# Band (relative to lam) for tangency and containment tests during merges.
TANGENT_BAND = 1e-9


class HullAlgorithm(Enum):
    VIA_BI = "via_bi"
    DIVIDE_CONQUER = "divide_conquer"


@dataclass(frozen=True)
class HullReport:
    """A built ball hull: boundary, provenance and per-arc centers."""

    boundary: ChainBoundary
    input_size: int
    radius: float
    algorithm: HullAlgorithm

    @property
    def vertex_centers(self):
        """Map from counterclockwise boundary arc index to generating center."""
        if not self.boundary.is_region:
            return {}
        order = list(self.boundary.lower) + list(reversed(self.boundary.upper))
        return {i: awc.generating_center for i, awc in enumerate(order)}


def build_ball_hull(plane, K, lam: float) -> HullReport:
    """Intersection of all radius-lam discs containing K (duality route).

    Steps: sort, build bi(K, lam), collect its vertices, build the ball
    intersection of those vertices.  A single-point bi (lam at the
    circumradius with a unique center c) makes the hull the full disc at c.
    """
    validate_plane(plane)
    if not (lam > 0.0):
        raise InvalidRadiusError(f"radius {lam} must be positive")
    pts = sort_points(K)
    if not pts:
        raise InvalidInputError("ball hull needs at least one point")
    bi = build_ball_intersection(plane, pts, lam)
    if bi.is_empty:
        raise RadiusTooSmallError(
            f"radius {lam} is below the circumradius of the input", witness=bi)
    if bi.is_single_point:
        boundary = _single_disc_region(plane, bi.point, lam)
    elif not bi.corners:
        # only a single input point yields a vertex-free ball intersection
        boundary = single_point_boundary(pts[0], lam, plane=plane)
    else:
        boundary = build_ball_intersection(plane, bi.corners, lam)
    return HullReport(boundary, len(pts), lam, HullAlgorithm.VIA_BI)


def _cross(d, w):
    return d[0] * w[1] - d[1] * w[0]


def _edge_center(plane, a, b, lam):
    """Center of the circle carrying the hull edge a -> b (region on the left)."""
    cands = circle_circle_intersection(plane, a, b, lam)
    if not cands:
        raise RadiusTooSmallError(
            f"no radius-{lam} disc holds both {a} and {b}", witness=None)
    if len(cands) == 1:
        return cands[0]
    d = (b[0] - a[0], b[1] - a[1])
    for z in cands:
        if _cross(d, (z[0] - a[0], z[1] - a[1])) > 0.0:
            return z
    return cands[0]


def _edge_arc(plane, a, b, lam) -> Arc:
    """Boundary arc for the counterclockwise hull edge a -> b."""
    z = _edge_center(plane, a, b, lam)
    return make_arc(plane, z, lam, theta_of(z, a), theta_of(z, b), a, b)


def _cycle_edges(cycle):
    n = len(cycle)
    return [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


def _extreme_arc_centers(plane, cycle, lam, rightmost):
    """Centers of the arc discs carrying the hull's extreme point.

    One disc when the extreme point is smooth (interior to an arc), the two
    incident discs when it is a corner.  A point beyond the split line lies
    in the hull iff it lies in all of these discs.
    """
    best = None
    per_edge = []
    for a, b in _cycle_edges(cycle):
        arc = _edge_arc(plane, a, b, lam)
        x_lo, x_hi = arc_x_range(arc)
        key = x_hi if rightmost else -x_lo
        per_edge.append((key, arc.center))
        if best is None or key > best:
            best = key
    return [c for key, c in per_edge if key >= best - 1e-12 * lam]


def _cycle_contains(plane, container, other, lam, container_on_left):
    if len(container) == 1:
        return False
    centers = _extreme_arc_centers(plane, container, lam,
                                   rightmost=container_on_left)
    band = TANGENT_BAND
    for v in other:
        for z in centers:
            if _kernels.lp_norm(v[0] - z[0], v[1] - z[1], plane.p) > lam * (1.0 + band):
                return False
    return True


def hull_contains_hull(plane, H_L: ChainBoundary, H_R: ChainBoundary, lam: float) -> bool:
    """Does the left hull contain the right one (inputs split by a vertical line)?

    True iff every vertex of the right hull lies in the disc(s) carrying the
    left hull's rightmost arc; hull vertices are input points, so for them
    that membership is equivalent to hull membership.
    """
    validate_plane(plane)
    right_corners = _boundary_corner_cycle(H_R)
    if H_L.is_single_point:
        return len(right_corners) == 1 and tuple(right_corners[0]) == tuple(H_L.point)
    discs = _rightmost_arc_centers(H_L)
    for v in right_corners:
        for z in discs:
            m = disc_membership(plane, z, lam, v, band=TANGENT_BAND)
            if m.location is Location.OUTSIDE:
                return False
    return True


def _rightmost_arc_centers(boundary: ChainBoundary):
    up = boundary.upper[-1].arc.center
    lo = boundary.lower[-1].arc.center
    return [up] if up == lo else [up, lo]


def _boundary_corner_cycle(boundary: ChainBoundary):
    """Corners of a region boundary in counterclockwise order."""
    if boundary.is_single_point:
        return [boundary.point]
    corner_set = set(boundary.corners)
    return [v for v in boundary.vertices if v in corner_set]


class _TangentFailure(Exception):
    pass


def _tangent_center(plane, a, b, lam, upper):
    """Disc center for the candidate tangent arc between a (left) and b (right)."""
    cands = circle_circle_intersection(plane, a, b, lam)
    if not cands:
        raise _TangentFailure(f"points {a} and {b} farther than 2*lam apart")
    if len(cands) == 1:
        return cands[0]
    d = (b[0] - a[0], b[1] - a[1])
    want_negative = upper
    for z in cands:
        cr = _cross(d, (z[0] - a[0], z[1] - a[1]))
        if (cr < 0.0) == want_negative:
            return z
    return cands[0]


def _inside(plane, z, lam, v):
    return _kernels.lp_norm(v[0] - z[0], v[1] - z[1], plane.p) <= lam * (1.0 + TANGENT_BAND)


def _walk_tangent(plane, cl, cr, lam, upper):
    """Rolling two-index search for one outer common tangent.

    The left index advances counterclockwise over the left hull's top (or
    clockwise over its bottom), the right index the mirror way; whichever
    endpoint's neighborhood pokes out of the candidate disc advances.  At
    most |L| + |R| advances reach the tangent pair.
    """
    nl, nr = len(cl), len(cr)
    li = max(range(nl), key=lambda i: cl[i])
    vj = min(range(nr), key=lambda j: cr[j])
    l_step = 1 if upper else -1
    v_step = -1 if upper else 1
    for _ in range(nl + nr + 4):
        z = _tangent_center(plane, cl[li], cr[vj], lam, upper)
        if nr > 1 and not (_inside(plane, z, lam, cr[(vj - 1) % nr])
                           and _inside(plane, z, lam, cr[(vj + 1) % nr])):
            vj = (vj + v_step) % nr
            continue
        if nl > 1 and not (_inside(plane, z, lam, cl[(li - 1) % nl])
                           and _inside(plane, z, lam, cl[(li + 1) % nl])):
            li = (li + l_step) % nl
            continue
        if all(_inside(plane, z, lam, v) for v in cl) and \
           all(_inside(plane, z, lam, v) for v in cr):
            return li, vj, z
        break
    return None


def _exhaustive_tangent(plane, cl, cr, lam, upper):
    """All-pairs fallback: pick the valid tangent disc bulging the right way."""
    best = None
    for i, a in enumerate(cl):
        for j, b in enumerate(cr):
            try:
                cands = circle_circle_intersection(plane, a, b, lam)
            except Exception:
                continue
            for z in cands:
                if not all(_inside(plane, z, lam, v) for v in cl):
                    continue
                if not all(_inside(plane, z, lam, v) for v in cr):
                    continue
                mx = 0.5 * (a[0] + b[0])
                my = 0.5 * (a[1] + b[1])
                th = math.atan2(my - z[1], mx - z[0])
                arc_mid = _kernels.sphere_point_xy(z[0], z[1], lam, th, plane.p)
                key = arc_mid[1] if upper else -arc_mid[1]
                if best is None or key > best[0]:
                    best = (key, i, j, z)
    if best is None:
        raise _TangentFailure("no common tangent disc contains both hulls")
    return best[1], best[2], best[3]


def _find_tangent(plane, cl, cr, lam, upper):
    got = _walk_tangent(plane, cl, cr, lam, upper)
    if got is not None:
        return got
    return _exhaustive_tangent(plane, cl, cr, lam, upper)


def _slice_ccw(cycle, i, j):
    out = [cycle[i]]
    while i != j:
        i = (i + 1) % len(cycle)
        out.append(cycle[i])
    return out


def _merge(plane, cl, cr, lam):
    if _cycle_contains(plane, cl, cr, lam, container_on_left=True):
        return cl
    if _cycle_contains(plane, cr, cl, lam, container_on_left=False):
        return cr
    li_up, vj_up, _ = _find_tangent(plane, cl, cr, lam, upper=True)
    li_lo, vj_lo, _ = _find_tangent(plane, cl, cr, lam, upper=False)
    merged = _slice_ccw(cl, li_up, li_lo) + _slice_ccw(cr, vj_lo, vj_up)
    # vertex heredity: every merged vertex was a vertex of its own sub-hull
    assert all(v in cl or v in cr for v in merged)
    return merged


def _dc(plane, pts, lam):
    if len(pts) == 1:
        return [pts[0]]
    mid = len(pts) // 2
    left = _dc(plane, pts[:mid], lam)
    right = _dc(plane, pts[mid:], lam)
    return _merge(plane, left, right, lam)


def _cycle_to_boundary(plane, cycle, lam) -> ChainBoundary:
    """Chain form of a counterclockwise corner cycle."""
    if len(cycle) == 1:
        return single_point_boundary(cycle[0], lam, plane=plane)
    arcs = [_edge_arc(plane, a, b, lam) for a, b in _cycle_edges(cycle)]

    # split any arc crossing a horizontal extreme of its circle so every
    # piece is a single upper or lower branch
    pieces = []
    for arc in arcs:
        cut = None
        k = math.floor(arc.theta_start / math.pi) + 1
        if k * math.pi > arc.theta_start + 1e-12 and k * math.pi < arc.theta_end - 1e-12:
            cut = k * math.pi
        if cut is None:
            pieces.append(arc)
        else:
            extreme = (arc.center[0] + lam, arc.center[1]) if cut % (2 * math.pi) < 1e-9 \
                else (arc.center[0] - lam, arc.center[1])
            pieces.append(make_arc(plane, arc.center, lam, arc.theta_start, cut,
                                   arc.start_point, extreme))
            pieces.append(make_arc(plane, arc.center, lam, cut, arc.theta_end,
                                   extreme, arc.end_point))

    start = min(range(len(pieces)), key=lambda i: pieces[i].start_point)
    pieces = pieces[start:] + pieces[:start]
    pm = max((pc.end_point for pc in pieces))
    lower_pieces = []
    upper_pieces = []
    on_lower = True
    for pc in pieces:
        if on_lower:
            lower_pieces.append([pc.center[0], pc.center[1], pc.start_point, pc.end_point])
            if pc.end_point == pm:
                on_lower = False
        else:
            upper_pieces.append([pc.center[0], pc.center[1], pc.end_point, pc.start_point])
    upper_pieces.reverse()
    return _build_region(plane, lam, upper_pieces, lower_pieces)


def build_ball_hull_dc(plane, K, lam: float) -> HullReport:
    """Divide-and-conquer ball hull over the sorted points (cross-check path)."""
    validate_plane(plane)
    if not (lam > 0.0):
        raise InvalidRadiusError(f"radius {lam} must be positive")
    pts = sort_points(K)
    if not pts:
        raise InvalidInputError("ball hull needs at least one point")
    if len(pts) == 1:
        return HullReport(single_point_boundary(pts[0], lam, plane=plane),
                          1, lam, HullAlgorithm.DIVIDE_CONQUER)
    try:
        cycle = _dc(plane, pts, lam)
    except (_TangentFailure, RadiusTooSmallError):
        witness = build_ball_intersection(plane, pts, lam)
        raise RadiusTooSmallError(
            f"radius {lam} is below the circumradius of the input", witness=witness)
    boundary = _cycle_to_boundary(plane, cycle, lam)
    return HullReport(boundary, len(pts), lam, HullAlgorithm.DIVIDE_CONQUER)


def outer_common_tangents(plane, H_L: ChainBoundary, H_R: ChainBoundary, lam: float):
    """The two radius-lam arcs tangent to both hulls (upper, lower).

    Each tangent disc contains both hulls and touches each in a vertex; the
    caller must rule out the containment cases first.
    """
    validate_plane(plane)
    cl = _boundary_corner_cycle(H_L)
    cr = _boundary_corner_cycle(H_R)
    if _cycle_contains(plane, cl, cr, lam, True) or _cycle_contains(plane, cr, cl, lam, False):
        raise InvalidInputError("one hull contains the other; no outer tangents")
    li_up, vj_up, z_up = _find_tangent(plane, cl, cr, lam, upper=True)
    li_lo, vj_lo, z_lo = _find_tangent(plane, cl, cr, lam, upper=False)
    upper = make_arc(plane, z_up, lam, theta_of(z_up, cr[vj_up]), theta_of(z_up, cl[li_up]),
                     cr[vj_up], cl[li_up])
    lower = make_arc(plane, z_lo, lam, theta_of(z_lo, cl[li_lo]), theta_of(z_lo, cr[vj_lo]),
                     cl[li_lo], cr[vj_lo])
    return upper, lower
