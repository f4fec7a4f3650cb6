"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one [PASS] line (run with ``pytest -s`` to see them all).
Heavy shared artifacts (instances, boundaries, hull pairs) are built once
and cached across criteria.
"""

import math
import time
from functools import lru_cache

import numpy as np
import pytest

from conftest import make_instance

from ballhull.chains import (
    boundary_membership,
    build_ball_intersection,
    region_margin,
    sample_boundary,
)
from ballhull.chebyshev import circumradius, diameter
from ballhull.hull import build_ball_hull, build_ball_hull_dc
from ballhull.norms import NormPlane, norm_eval, norms_of
from ballhull.oracle import (
    enclosing_grid_centers,
    oracle_bi_membership,
    oracle_circumradius,
    oracle_two_center,
)
from ballhull.two_center import coverage_check, solve_constrained_two_center


def _passed(k, msg):
    print(f"\n[PASS] criterion {k}: {msg}")


@lru_cache(maxsize=None)
def bi_instances():
    return tuple(make_instance(10_000 + i) for i in range(200))


@lru_cache(maxsize=None)
def bi_boundaries():
    return tuple((inst, build_ball_intersection(inst.plane, inst.points, inst.lam))
                 for inst in bi_instances())


@lru_cache(maxsize=None)
def hull_pairs():
    out = []
    for i in range(200):
        inst = make_instance(20_000 + i, n_lo=2, n_hi=24)
        via = build_ball_hull(inst.plane, inst.points, inst.lam)
        dc = build_ball_hull_dc(inst.plane, inst.points, inst.lam)
        out.append((inst, via, dc))
    return tuple(out)


def margin_hausdorff(plane, a, b, per_arc=32):
    if a.is_single_point and b.is_single_point:
        return norm_eval(plane, (a.point[0] - b.point[0], a.point[1] - b.point[1]))
    worst = 0.0
    for src, dst in ((a, b), (b, a)):
        for q in sample_boundary(src, per_arc):
            worst = max(worst, abs(region_margin(plane, dst, q)))
    return worst


def test_criterion_1_bi_oracle_equivalence():
    started = time.perf_counter()
    rng = np.random.default_rng(555)
    checked = 0
    for inst, boundary in bi_boundaries():
        pts = np.asarray(inst.points)
        lo = pts.min(axis=0) - 1.2 * inst.lam
        hi = pts.max(axis=0) + 1.2 * inst.lam
        queries = rng.uniform(lo, hi, size=(100, 2))
        margins = np.full(len(queries), -np.inf)
        for x, y in inst.points:
            margins = np.maximum(margins, norms_of(
                NormPlane(inst.plane.p), queries - (x, y)) - inst.lam)
        for q, true_margin in zip(queries, margins):
            if abs(true_margin) <= 1e-6 * inst.lam:
                continue
            want = oracle_bi_membership(inst.plane, inst.points, inst.lam, tuple(q))
            got = boundary_membership(inst.plane, boundary, tuple(q)).covered
            assert got == want, (inst, q)
            checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"criterion 1 took {elapsed:.1f}s, budget 30s"
    assert checked > 15_000
    _passed(1, f"bi matches the oracle on {checked} queries over 200 instances "
               f"outside the 1e-6*lam band ({elapsed:.1f}s)")


def test_criterion_2_bh_oracle_equivalence():
    rng = np.random.default_rng(777)
    checked = definitive = 0
    for i in range(200):
        inst = make_instance(30_000 + i, u_lo=0.02)
        plane, lam = inst.plane, inst.lam
        rep = build_ball_hull(plane, inst.points, lam)
        centers = enclosing_grid_centers(plane, inst.points, lam, grid_n=400)
        assert len(centers) > 0
        pts = np.asarray(inst.points)
        lo = pts.min(axis=0) - 1.2 * lam
        hi = pts.max(axis=0) + 1.2 * lam
        queries = [tuple(q) for q in rng.uniform(lo, hi, size=(47, 2))]
        queries.append(tuple(pts.mean(axis=0)))
        a, b = rng.integers(0, len(pts), size=2)
        queries.append(((pts[a][0] + pts[b][0]) / 2, (pts[a][1] + pts[b][1]) / 2))
        queries.append(tuple(pts[rng.integers(0, len(pts))] * 0.999 + pts.mean(axis=0) * 0.001))
        for q in queries:
            fast_margin = region_margin(plane, rep.boundary, q)
            if abs(fast_margin) <= 1e-3 * lam:
                continue
            checked += 1
            dists = norms_of(plane, centers - np.asarray(q))
            oracle_inside = bool(np.all(dists <= lam * (1.0 + 1e-6)))
            if fast_margin < 0.0:
                assert oracle_inside, (inst, q, fast_margin)
            if not oracle_inside:
                definitive += 1
                assert fast_margin > -1e-3 * lam, (inst, q, fast_margin)
            if fast_margin > 0.05 * lam:
                assert not oracle_inside, (inst, q, fast_margin)
    assert checked > 7_000 and definitive > 3_000
    _passed(2, f"bh matches the grid oracle outside the 1e-3*lam band on "
               f"{checked} queries ({definitive} definitive exclusions)")


def test_criterion_3_hull_cross_validation():
    worst = 0.0
    for inst, via, dc in hull_pairs():
        h = margin_hausdorff(inst.plane, via.boundary, dc.boundary)
        worst = max(worst, h / inst.lam)
        assert h < 1e-8 * inst.lam, (inst, h)
    _passed(3, f"ViaBi and DivideConquer agree on 200 instances; worst sampled "
               f"Hausdorff {worst:.2e}*lam (tolerance 1e-8)")


def test_criterion_4_center_order_reversal():
    chains = 0
    boundaries = [b for _, b in bi_boundaries()]
    boundaries += [rep.boundary for _, via, dc in hull_pairs() for rep in (via, dc)]
    for boundary in boundaries:
        if not boundary.is_region:
            continue
        for chain in (boundary.upper, boundary.lower):
            centers = [awc.generating_center for awc in chain]
            assert all(c1 > c2 for c1, c2 in zip(centers, centers[1:])), centers
            chains += 1
    assert chains >= 2 * len(bi_boundaries())
    _passed(4, f"arc centers strictly reversed (lexicographically) on {chains} chains")


def test_criterion_5_duality():
    checked = 0
    for i in range(100):
        inst = make_instance(40_000 + i)
        plane, lam = inst.plane, inst.lam
        bi1 = build_ball_intersection(plane, inst.points, lam)
        rep = build_ball_hull(plane, inst.points, lam)
        hull_centers = sorted({awc.arc.center
                               for awc in rep.boundary.upper + rep.boundary.lower})
        if bi1.is_single_point:
            for c in hull_centers:
                assert norm_eval(plane, (c[0] - bi1.point[0], c[1] - bi1.point[1])) \
                    < 1e-8 * lam
            continue
        assert bi1.corners
        for c in hull_centers:
            assert min(norm_eval(plane, (c[0] - v[0], c[1] - v[1]))
                       for v in bi1.corners) < 1e-8 * lam
        for v in bi1.corners:
            assert min(norm_eval(plane, (c[0] - v[0], c[1] - v[1]))
                       for c in hull_centers) < 1e-8 * lam
        k2 = rep.boundary.corners
        assert k2
        bi2 = build_ball_intersection(plane, k2, lam)
        assert margin_hausdorff(plane, bi1, bi2) < 1e-8 * lam
        checked += 1
    assert checked >= 90
    _passed(5, f"hull arc centers = bi vertices and bi(K) = bi(K'') on {checked} "
               "regular instances (1e-8*lam)")


def test_criterion_6_circumradius():
    for inst in bi_instances():
        assert inst.lam_k <= inst.diam * (1.0 + 1e-8)
        assert inst.diam <= 2.0 * inst.lam_k * (1.0 + 1e-8)
    compared = 0
    for i in range(30):
        inst = make_instance(50_000 + i, n_lo=3, n_hi=10)
        slow = oracle_circumradius(inst.plane, inst.points)
        assert abs(inst.lam_k - slow) < 1e-7, (inst.lam_k, slow)
        compared += 1
    p2 = NormPlane(2.0)
    tri = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3.0) / 2.0)]
    sq = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    assert abs(circumradius(p2, tri).lambda_k - 0.5773502691896258) < 1e-8
    assert abs(circumradius(p2, sq).lambda_k - 0.7071067811865476) < 1e-8
    _passed(6, f"lam_K <= diam <= 2*lam_K on 200 instances; oracle agreement "
               f"within 1e-7 on {compared} small instances; closed forms within 1e-8")


def _two_center_instance(i):
    rng = np.random.default_rng(60_000 + i)
    plane = NormPlane(float(rng.choice([1.5, 2.0, 3.0, 8.0])))
    if i % 2 == 0:
        # two clusters, each within r of its own cluster seed point
        n_per = int(rng.integers(3, 20))
        gap = float(rng.uniform(6.0, 12.0))
        spread = float(rng.uniform(0.3, 1.0))
        a = rng.uniform(-spread, spread, size=(n_per, 2))
        b = rng.uniform(-spread, spread, size=(n_per, 2)) + (gap, 0.0)
        pts = [(0.0, 0.0), (gap, 0.0)]
        pts += [tuple(q) for q in np.vstack([a, b])]
        reach = max(float(norms_of(plane, np.asarray(pts) - c).max())
                    for c in ((0.0, 0.0), (gap, 0.0)))
        r = lam2 = spread * 2.5 + 0.01
        feasible_hint = all(
            min(norm_eval(plane, (q[0], q[1])), norm_eval(plane, (q[0] - gap, q[1]))) <= r
            for q in pts)
    else:
        n = int(rng.integers(6, 41))
        pts = [tuple(q) for q in rng.uniform(0.0, 10.0, size=(n, 2))]
        r = float(rng.uniform(0.8, 2.0))
        lam2 = r * float(rng.uniform(0.4, 1.0))
        feasible_hint = None
    return plane, pts, float(r), float(lam2), feasible_hint


def test_criterion_7_two_center():
    feas = infeas = 0
    for i in range(100):
        plane, pts, r, lam2, hint = _two_center_instance(i)
        fast = solve_constrained_two_center(plane, pts, r, lam2)
        slow = oracle_two_center(plane, pts, r, lam2)
        assert fast.feasible == slow.feasible, (i, fast.feasible, slow.feasible)
        if hint is not None and hint:
            assert fast.feasible
        if fast.feasible:
            feas += 1
            assert coverage_check(plane, pts, r, lam2,
                                  fast.big_center, fast.small_center, band=1e-9)
        else:
            infeas += 1
    assert feas >= 20 and infeas >= 20, (feas, infeas)
    _passed(7, f"feasibility matches the all-pairs oracle on 100 instances "
               f"({feas} feasible / {infeas} infeasible); pairs pass coverage at 1e-9")


def _median_time(fn, reps=5):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return sorted(times)[reps // 2]


def test_criterion_8_scaling():
    started = time.perf_counter()
    plane = NormPlane(2.0)
    rng = np.random.default_rng(88)

    def bi_timer(n):
        pts = [tuple(q) for q in rng.uniform(0.0, 10.0, size=(n, 2))]
        span = np.asarray(pts).max(axis=0) - np.asarray(pts).min(axis=0)
        lam = float(norm_eval(plane, tuple(span)))  # >= diam >= lam_K
        build_ball_intersection(plane, pts, lam)  # warm
        return _median_time(lambda: build_ball_intersection(plane, pts, lam))

    t_small = bi_timer(2 ** 14)
    t_big = bi_timer(2 ** 16)
    bi_ratio = t_big / t_small
    assert bi_ratio <= 5.5, f"bi time ratio {bi_ratio:.2f} for 4x points"

    def tc_timer(n):
        pts = [tuple(q) for q in rng.uniform(0.0, 10.0, size=(n, 2))]
        r = lam2 = 2.5
        ans = solve_constrained_two_center(plane, pts, r, lam2)
        assert not ans.feasible  # keeps every candidate's inner scan running
        return _median_time(lambda: solve_constrained_two_center(plane, pts, r, lam2))

    t_small = tc_timer(2 ** 9)
    t_big = tc_timer(2 ** 10)
    tc_ratio = t_big / t_small
    assert 3.0 <= tc_ratio <= 5.5, f"2-center time ratio {tc_ratio:.2f} for 2x points"
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _passed(8, f"bi grows {bi_ratio:.2f}x for 4x points (<= 5.5); 2-center grows "
               f"{tc_ratio:.2f}x for 2x points (in [3.0, 5.5]); took {elapsed:.0f}s")


def test_criterion_9_euclidean_kernel():
    from ballhull.arcs import circle_circle_intersection

    plane = NormPlane(2.0)
    rng = np.random.default_rng(99)
    checked = 0
    for _ in range(1000):
        c1 = tuple(rng.uniform(0.0, 10.0, size=2))
        c2 = tuple(rng.uniform(0.0, 10.0, size=2))
        d = math.hypot(c2[0] - c1[0], c2[1] - c1[1])
        if d < 1e-9:
            continue
        lam = float(rng.uniform(0.51, 2.0)) * d
        got = sorted(circle_circle_intersection(plane, c1, c2, lam))
        # closed-form radical line construction
        h = math.sqrt(max(lam * lam - 0.25 * d * d, 0.0))
        mx, my = 0.5 * (c1[0] + c2[0]), 0.5 * (c1[1] + c2[1])
        ux, uy = (c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d
        want = sorted([(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)])
        assert len(got) == 2
        for g, w in zip(got, want):
            assert abs(g[0] - w[0]) < 1e-10 and abs(g[1] - w[1]) < 1e-10
        checked += 1
    assert checked >= 990
    _passed(9, f"Euclidean intersections match the radical-line closed form "
               f"to 1e-10 on {checked} instances")
