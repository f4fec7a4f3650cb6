import math

import numpy as np
import pytest

from ballhull.arcs import (
    Location,
    arc_point_at_x,
    arc_sample,
    arc_x_range,
    circle_circle_intersection,
    disc_membership,
    full_circle,
    make_arc,
    minimal_arcs,
    theta_of,
)
from ballhull.errors import (
    CoincidentCentersError,
    DegenerateChordError,
    NoCommonDiscError,
)
from ballhull.norms import NormPlane, norm_eval

from conftest import assert_points_close

P2 = NormPlane(2.0)
P4 = NormPlane(4.0)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def euclidean_circle_intersection(c1, c2, lam):
    """Closed-form radical-line construction, equal radii."""
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    d = math.hypot(dx, dy)
    if d > 2 * lam:
        return []
    h2 = lam * lam - 0.25 * d * d
    mx, my = 0.5 * (c1[0] + c2[0]), 0.5 * (c1[1] + c2[1])
    if h2 <= 0.0:
        return [(mx, my)]
    h = math.sqrt(h2)
    ux, uy = dx / d, dy / d
    return [(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)]


def test_intersection_euclidean_examples():
    got = circle_circle_intersection(P2, (0, 0), (2, 0), SQRT2)
    assert_points_close(sorted(got, key=lambda q: q[1]), [(1, -1), (1, 1)], 1e-10)
    assert_points_close(circle_circle_intersection(P2, (0, 0), (2, 0), 1.0), [(1.0, 0.0)], 1e-12)


def test_intersection_p4_example():
    got = circle_circle_intersection(P4, (0, 0), (1, 0), 1.0)
    # x = 1/2 by symmetry; y solves (1/2)^4 + y^4 = 1, frozen from a bisection oracle
    y = 0.9839948356327152
    assert_points_close(sorted(got, key=lambda q: q[1]), [(0.5, -y), (0.5, y)], 1e-10)


def test_intersection_empty_and_errors():
    assert circle_circle_intersection(P2, (0, 0), (5, 0), 1.0) == []
    with pytest.raises(CoincidentCentersError):
        circle_circle_intersection(P2, (1, 1), (1, 1), 1.0)


def test_intersection_residual_and_symmetry(rng):
    for p in (1.5, 2.0, 3.0, 8.0):
        plane = NormPlane(p)
        for _ in range(60):
            c1 = tuple(rng.uniform(0, 10, size=2))
            c2 = tuple(rng.uniform(0, 10, size=2))
            if c1 == c2:
                continue
            lam = float(rng.uniform(0.3, 1.2)) * max(norm_eval(plane, (c2[0] - c1[0], c2[1] - c1[1])), 0.1)
            pts = circle_circle_intersection(plane, c1, c2, lam)
            for q in pts:
                for c in (c1, c2):
                    r = norm_eval(plane, (q[0] - c[0], q[1] - c[1]))
                    assert abs(r - lam) < 1e-10 * lam
            rev = circle_circle_intersection(plane, c2, c1, lam)
            assert len(rev) == len(pts)
            for q in pts:
                assert min(math.hypot(q[0] - w[0], q[1] - w[1]) for w in rev) < 1e-10 * lam


def test_intersection_ccw_order_around_first_center(rng):
    for _ in range(40):
        c1 = tuple(rng.uniform(0, 4, size=2))
        c2 = tuple(rng.uniform(0, 4, size=2))
        if c1 == c2:
            continue
        lam = 0.8 * max(math.hypot(c2[0] - c1[0], c2[1] - c1[1]), 0.05)
        pts = circle_circle_intersection(P2, c1, c2, lam)
        if len(pts) == 2:
            assert theta_of(c1, pts[0]) <= theta_of(c1, pts[1])


def test_intersection_euclidean_closed_form_bulk(rng):
    # acceptance 9 at unit-test scale
    for _ in range(200):
        c1 = tuple(rng.uniform(0, 10, size=2))
        c2 = tuple(rng.uniform(0, 10, size=2))
        d = math.hypot(c2[0] - c1[0], c2[1] - c1[1])
        if d < 1e-6:
            continue
        lam = float(rng.uniform(0.55, 1.5)) * d
        got = sorted(circle_circle_intersection(P2, c1, c2, lam))
        want = sorted(euclidean_circle_intersection(c1, c2, lam))
        assert len(got) == len(want)
        for g, w in zip(got, want):
            assert g == pytest.approx(w, abs=1e-10)


def test_near_tangency_two_roots_still_found():
    # separation 2*lam*(1 - 1e-6) leaves two genuinely distinct roots
    lam = 1.0
    d = 2.0 * (1.0 - 1e-6)
    got = circle_circle_intersection(P2, (0, 0), (d, 0), lam)
    want = euclidean_circle_intersection((0, 0), (d, 0), lam)
    assert len(got) == 2
    for g, w in zip(sorted(got), sorted(want)):
        assert g == pytest.approx(w, abs=1e-9)


def test_tangency_collapse_at_diametral_distance():
    lam = 1.0
    got = circle_circle_intersection(P2, (0, 0), (2.0, 0), lam)
    assert got == pytest.approx([(1.0, 0.0)], abs=1e-12)
    # just past tangency but inside the +1e-12 slack: still the midpoint
    d = 2.0 * (1.0 + 5e-13)
    got = circle_circle_intersection(P2, (0, 0), (d, 0), lam)
    assert got == pytest.approx([(d / 2, 0.0)], abs=1e-9)


def test_disc_membership_examples():
    m = disc_membership(P2, (0, 0), 1.0, (0.0, 0.0))
    assert m.location is Location.INSIDE and m.margin == pytest.approx(-1.0)
    m = disc_membership(P2, (0, 0), 1.0, (1.0, 0.0))
    assert m.location is Location.ON_BOUNDARY and m.margin == pytest.approx(0.0, abs=1e-15)
    m = disc_membership(NormPlane(3.0), (0, 0), 1.0, (1.0, 1.0))
    assert m.location is Location.OUTSIDE
    assert m.margin == pytest.approx(1.2599210498948732 - 1.0, abs=1e-13)


def test_minimal_arcs_quarter_circle():
    arcs = minimal_arcs(P2, (1.0, 0.0), (0.0, 1.0), 1.0)
    origin_arc = min(arcs, key=lambda a: a.center[0] ** 2 + a.center[1] ** 2)
    mid = arc_sample(origin_arc, 2)[1]
    assert mid == pytest.approx((SQRT2 / 2, SQRT2 / 2), abs=1e-9)


def test_minimal_arcs_centers_euclidean():
    arcs = minimal_arcs(P2, (0.0, 0.0), (1.0, 0.0), 1.0)
    centers = sorted(a.center for a in arcs)
    assert_points_close(centers, [(0.5, -SQRT3 / 2), (0.5, SQRT3 / 2)], 1e-10)


def test_minimal_arcs_centers_p4():
    arcs = minimal_arcs(P4, (0.0, 0.0), (1.0, 0.0), 1.0)
    y = 0.9839948356327152
    centers = sorted(a.center for a in arcs)
    assert_points_close(centers, [(0.5, -y), (0.5, y)], 1e-10)


def test_minimal_arcs_on_far_side_of_chord(rng):
    # every sampled arc point sits across the chord from the arc's center
    for p in (1.5, 2.0, 3.0):
        plane = NormPlane(p)
        for _ in range(30):
            a = tuple(rng.uniform(0, 5, size=2))
            b = tuple(rng.uniform(0, 5, size=2))
            if a == b:
                continue
            d = norm_eval(plane, (b[0] - a[0], b[1] - a[1]))
            lam = float(rng.uniform(0.51, 2.0)) * d
            for arc in minimal_arcs(plane, a, b, lam):
                cx = (b[0] - a[0]) * (arc.center[1] - a[1]) - (b[1] - a[1]) * (arc.center[0] - a[0])
                for q in arc_sample(arc, 16)[1:-1]:
                    cq = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
                    assert cq * cx <= 0.0


def test_minimal_arcs_half_circles_at_diametral_distance():
    arcs = minimal_arcs(P2, (0.0, 0.0), (2.0, 0.0), 1.0)
    assert len(arcs) == 2
    for arc in arcs:
        assert arc.center == pytest.approx((1.0, 0.0), abs=1e-9)
        assert arc.extent == pytest.approx(math.pi, abs=1e-6)


def test_minimal_arcs_containment_in_enclosing_discs(rng):
    # arc points lie in every radius-lam disc holding both endpoints
    plane = NormPlane(3.0)
    a, b = (1.0, 1.0), (3.0, 2.0)
    lam = 2.0
    arcs = minimal_arcs(plane, a, b, lam)
    centers = []
    while len(centers) < 50:
        c = tuple(rng.uniform(-1, 5, size=2))
        if norm_eval(plane, (a[0] - c[0], a[1] - c[1])) <= lam and \
           norm_eval(plane, (b[0] - c[0], b[1] - c[1])) <= lam:
            centers.append(c)
    for arc in arcs:
        for q in arc_sample(arc, 24):
            for c in centers:
                assert disc_membership(plane, c, lam, q, band=1e-8).covered


def test_center_identity_second_circle_through_two_sphere_points(rng):
    # circles through two points of S(o, lam) have centers o and p + q - o
    for p in (1.5, 2.0, 8.0):
        plane = NormPlane(p)
        for _ in range(25):
            o = tuple(rng.uniform(0, 4, size=2))
            lam = float(rng.uniform(0.5, 2.0))
            th1, th2 = rng.uniform(0, 2 * math.pi, size=2)
            if abs(math.remainder(th1 - th2, 2 * math.pi)) < 0.1:
                continue
            from ballhull.norms import sphere_point

            pp = sphere_point(plane, o, lam, th1)
            qq = sphere_point(plane, o, lam, th2)
            centers = circle_circle_intersection(plane, pp, qq, lam)
            expect = {o, (pp[0] + qq[0] - o[0], pp[1] + qq[1] - o[1])}
            assert len(centers) == len(expect)
            for c in centers:
                assert min(math.hypot(c[0] - e[0], c[1] - e[1]) for e in expect) < 1e-9 * lam


def test_minimal_arcs_errors():
    with pytest.raises(NoCommonDiscError):
        minimal_arcs(P2, (0, 0), (3, 0), 1.0)
    with pytest.raises(DegenerateChordError):
        minimal_arcs(P2, (1, 1), (1, 1), 1.0)


def test_arc_sample_full_circle():
    arc = full_circle(P2, (0.0, 0.0), 1.0)
    got = arc_sample(arc, 4)
    want = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)]
    for g, w in zip(got, want):
        assert g == pytest.approx(w, abs=1e-12)


def test_arc_sample_endpoints_exact():
    arcs = minimal_arcs(P2, (0.3, 0.4), (1.1, -0.2), 1.0)
    for arc in arcs:
        got = arc_sample(arc, 1)
        assert got == [arc.start_point, arc.end_point]


def test_arc_x_range_and_point_at_x():
    circle = full_circle(P2, (0.0, 0.0), 1.0)
    assert arc_x_range(circle) == pytest.approx((-1.0, 1.0), abs=1e-12)

    quarter = make_arc(P2, (0.0, 0.0), 1.0, 0.0, math.pi / 2,
                       (1.0, 0.0), (0.0, 1.0))
    hit = arc_point_at_x(quarter, SQRT2 / 2)
    assert len(hit) == 1
    assert hit[0] == pytest.approx((SQRT2 / 2, SQRT2 / 2), abs=1e-10)
    assert arc_point_at_x(quarter, 2.0) == []

    hits = arc_point_at_x(circle, 0.25)
    assert len(hits) == 2
    ys = sorted(q[1] for q in hits)
    assert ys == pytest.approx([-math.sqrt(1 - 0.0625), math.sqrt(1 - 0.0625)], abs=1e-10)
