"""Strictly convex norm planes: evaluation, sphere parametrization, checks.

The plane family is Lp with exponent 1 < p < inf.  All geometry in the
package goes through these entry points (or the matching kernels), so a new
norm family only needs a norm evaluation and a sphere parametrization here.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import InvalidInputError, InvalidRadiusError, NotStrictlyConvexError

Point = tuple[float, float]


class NormFamily(Enum):
    LP = "lp"


@dataclass(frozen=True)
class NormPlane:
    """An Lp norm plane.  Strict convexity requires 1 < p < inf."""

    p: float
    family: NormFamily = NormFamily.LP

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))


EUCLIDEAN = NormPlane(2.0)


def validate_plane(plane: NormPlane) -> None:
    """Raise NotStrictlyConvexError unless the plane's unit ball is strictly convex."""
    if plane.family is not NormFamily.LP:
        raise NotStrictlyConvexError(f"unsupported norm family {plane.family}")
    p = plane.p
    if not math.isfinite(p):
        raise NotStrictlyConvexError(f"exponent p={p} must be finite (p = inf gives a square ball)")
    if p <= 1.0:
        raise NotStrictlyConvexError(f"exponent p={p} violates p > 1 (the L1 ball has flat edges)")


def require_finite(*values) -> None:
    for v in values:
        if not math.isfinite(v):
            raise InvalidInputError(f"non-finite coordinate {v!r}")


def norm_eval(plane: NormPlane, v: Point) -> float:
    """Norm of the vector v; zero exactly for the zero vector."""
    x, y = float(v[0]), float(v[1])
    require_finite(x, y)
    return _kernels.lp_norm(x, y, plane.p)


def dist(plane: NormPlane, a: Point, b: Point) -> float:
    """Norm distance between two points."""
    return _kernels.lp_norm(float(b[0]) - float(a[0]), float(b[1]) - float(a[1]), plane.p)


def sphere_point(plane: NormPlane, center: Point, lam: float, theta: float) -> Point:
    """Point of the sphere of radius lam around center in ray direction theta.

    The map theta -> point is a continuous bijection onto the sphere and is
    strictly monotone in the angular order (radial parametrization of a
    strictly convex, centrally symmetric body).
    """
    if not (lam > 0.0):
        raise InvalidRadiusError(f"radius {lam} must be positive")
    require_finite(center[0], center[1], lam, theta)
    return _kernels.sphere_point_xy(float(center[0]), float(center[1]), lam, theta, plane.p)


def norms_of(plane: NormPlane, vecs: np.ndarray) -> np.ndarray:
    """Vectorized norm of an (..., 2) array of vectors."""
    v = np.asarray(vecs, dtype=float)
    x = np.abs(v[..., 0])
    y = np.abs(v[..., 1])
    if plane.p == 2.0:
        return np.hypot(x, y)
    m = np.maximum(x, y)
    out = np.zeros_like(m)
    nz = m > 0
    xs = x[nz] / m[nz]
    ys = y[nz] / m[nz]
    out[nz] = m[nz] * (xs ** plane.p + ys ** plane.p) ** (1.0 / plane.p)
    return out


def dists_to(plane: NormPlane, points: np.ndarray, q) -> np.ndarray:
    """Vectorized norm distances from each row of an (n, 2) array to q."""
    pts = np.asarray(points, dtype=float)
    return norms_of(plane, pts - np.asarray(q, dtype=float))
