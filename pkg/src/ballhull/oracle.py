"""Definition-level brute-force ground truth for the fast algorithms.

Nothing here touches the chain or hull builders; only norm evaluation and
plain enumeration, so these can referee them.  Runtime is quadratic to
grid-quadratic by design.
"""

import numpy as np

from .norms import NormPlane, Point, dists_to, norms_of, validate_plane
from .two_center import TwoCenterAnswer


def oracle_bi_membership(plane, K, lam: float, q: Point) -> bool:
    """q within lam (plus hairline slack) of every point of K."""
    validate_plane(plane)
    pts = np.asarray(list(K), dtype=float)
    return bool(np.all(dists_to(plane, pts, q) <= lam * (1.0 + 1e-12)))


def enclosing_grid_centers(plane, K, lam: float, grid_n: int = 400) -> np.ndarray:
    """Grid centers over the lam-inflated bounding box whose discs hold K.

    The validity slack is 1e-9*lam so true enclosing centers on the grid
    are never lost to rounding.
    """
    validate_plane(plane)
    pts = np.asarray(list(K), dtype=float)
    x_lo, y_lo = pts.min(axis=0) - lam
    x_hi, y_hi = pts.max(axis=0) + lam
    xs = np.linspace(x_lo, x_hi, grid_n)
    ys = np.linspace(y_lo, y_hi, grid_n)
    gx, gy = np.meshgrid(xs, ys)
    centers = np.column_stack([gx.ravel(), gy.ravel()])
    for k in pts:
        centers = centers[norms_of(plane, centers - k) <= lam * (1.0 + 1e-9)]
    return centers


def oracle_bh_membership(plane, K, lam: float, q: Point, grid_n: int = 400) -> bool:
    """q inside every grid-sampled enclosing disc (one-sided approximation).

    Refining the grid can only remove false positives, so a False here is a
    definitive exclusion witness while True is presumptive near the
    boundary; tests consult it only outside a boundary band.
    """
    if grid_n < 100:
        raise ValueError("grid_n must be at least 100")
    centers = enclosing_grid_centers(plane, K, lam, grid_n)
    if len(centers) == 0:
        return True
    return bool(np.all(norms_of(plane, centers - np.asarray(q, dtype=float))
                       <= lam * (1.0 + 1e-6)))


def oracle_circumradius(plane, K, tol: float = 1e-12) -> float:
    """Minimax center search by nested ternary section.

    f(c) = max distance from c to K is convex for any norm, as is its
    partial minimum over y, so two nested ternary searches find the value.
    """
    validate_plane(plane)
    pts = np.asarray(list(K), dtype=float)
    if len(pts) == 1:
        return 0.0

    def radius_at(cx, cy):
        return float(norms_of(plane, pts - (cx, cy)).max())

    spread = float(norms_of(plane, pts.max(axis=0) - pts.min(axis=0)) + 1.0)

    def min_over_y(cx):
        lo = float(pts[:, 1].min()) - spread
        hi = float(pts[:, 1].max()) + spread
        for _ in range(90):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if radius_at(cx, m1) < radius_at(cx, m2):
                hi = m2
            else:
                lo = m1
        return radius_at(cx, 0.5 * (lo + hi))

    lo = float(pts[:, 0].min()) - spread
    hi = float(pts[:, 0].max()) + spread
    for _ in range(90):
        if hi - lo < tol:
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if min_over_y(m1) < min_over_y(m2):
            hi = m2
        else:
            lo = m1
    return min_over_y(0.5 * (lo + hi))


def oracle_two_center(plane, K, r: float, lam2: float) -> TwoCenterAnswer:
    """Exhaustive test of all ordered center pairs from K."""
    validate_plane(plane)
    pts = sorted({(float(q[0]), float(q[1])) for q in K})
    arr = np.asarray(pts, dtype=float)
    n = len(arr)
    dmat = np.empty((n, n))
    for i in range(n):
        dmat[i] = dists_to(plane, arr, arr[i])
    big_ok = dmat <= r * (1.0 + 1e-9)
    small_ok = dmat <= lam2 * (1.0 + 1e-9)
    for i in range(n):
        uncovered = ~big_ok[i]
        if not uncovered.any():
            return TwoCenterAnswer(True, big_center=pts[i], small_center=pts[i],
                                   single_disc=True)
        for j in range(n):
            if not (uncovered & ~small_ok[j]).any():
                return TwoCenterAnswer(True, big_center=pts[i], small_center=pts[j])
    best = max(range(n), key=lambda i: int(big_ok[i].sum()))
    witness = tuple(pts[k] for k in range(n) if not big_ok[best][k])
    return TwoCenterAnswer(False, uncovered_witness=witness, witness_center=pts[best])
