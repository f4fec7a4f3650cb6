"""Circumradius, Chebyshev set and diameter of a finite point set.

The circumradius lambda_K is bracketed by diam/2 <= lambda_K <= diam and is
the threshold where the ball intersection bi(K, lam) stops being empty, so
it is found by bisection on that emptiness.  The Chebyshev set (all centers
of minimal enclosing discs) is bi(K, lambda_K) itself.
"""

from dataclasses import dataclass

import numpy as np

from .chains import ChainBoundary, build_ball_intersection, single_point_boundary, sort_points
from .errors import InvalidInputError
from .norms import NormPlane, norms_of, validate_plane


@dataclass(frozen=True)
class CircumResult:
    lambda_k: float
    chebyshev_set: ChainBoundary
    iterations: int
    residual: float


def diameter(plane: NormPlane, K) -> float:
    """Largest pairwise norm distance, exact max over all pairs."""
    validate_plane(plane)
    pts = np.asarray(sort_points(K), dtype=float)
    if pts.size == 0:
        raise InvalidInputError("diameter needs at least one point")
    if len(pts) == 1:
        return 0.0
    best = 0.0
    for i in range(len(pts) - 1):
        d = norms_of(plane, pts[i + 1:] - pts[i]).max()
        if d > best:
            best = float(d)
    return best


def circumradius(plane: NormPlane, K, tol: float = 1e-9) -> CircumResult:
    """Smallest lam with bi(K, lam) non-empty, to relative tolerance tol.

    Bisection keeps an empty lower radius and a non-empty upper radius; the
    bracket [diam/2, diam] is valid for every norm.
    """
    validate_plane(plane)
    if not (tol > 0.0):
        raise InvalidInputError(f"tolerance {tol} must be positive")
    pts = sort_points(K)
    if not pts:
        raise InvalidInputError("circumradius needs at least one point")
    if len(pts) == 1:
        return CircumResult(0.0, single_point_boundary(pts[0], 0.0, plane=plane), 0, 0.0)
    diam = diameter(plane, pts)
    lo = 0.5 * diam
    if not build_ball_intersection(plane, pts, lo).is_empty:
        return CircumResult(lo, build_ball_intersection(plane, pts, lo), 0, 0.0)
    hi = diam
    iterations = 0
    while hi - lo > tol * hi and iterations < 60:
        mid = 0.5 * (lo + hi)
        if build_ball_intersection(plane, pts, mid).is_empty:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return CircumResult(hi, build_ball_intersection(plane, pts, hi),
                        iterations, hi - lo)


def monotonicity_check(plane: NormPlane, K1, K2, tol: float = 1e-9) -> bool:
    """True when the circumradius of K1 does not exceed that of K2 (plus slack).

    Intended for K1 a subset of K2, where the inequality is a theorem.
    """
    r1 = circumradius(plane, K1, tol).lambda_k
    r2 = circumradius(plane, K2, tol).lambda_k
    return r1 <= r2 + tol * max(1.0, r2)
