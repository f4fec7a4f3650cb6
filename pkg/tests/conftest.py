"""Shared instance generation for the test suite."""

from dataclasses import dataclass

import numpy as np
import pytest

from ballhull.chebyshev import circumradius, diameter
from ballhull.norms import NormPlane

P_CHOICES = (1.5, 2.0, 3.0, 8.0)


@dataclass(frozen=True)
class Instance:
    plane: NormPlane
    points: tuple
    lam: float
    lam_k: float
    diam: float


def make_instance(seed, n_lo=3, n_hi=12, box=10.0, u_lo=0.0, u_hi=1.0):
    """Seeded random instance: points in a box, radius in [lam_K, 2*diam].

    u_lo/u_hi select the sub-range of that radius interval.
    """
    rng = np.random.default_rng(seed)
    plane = NormPlane(float(rng.choice(P_CHOICES)))
    n = int(rng.integers(n_lo, n_hi + 1))
    pts = tuple(map(tuple, rng.uniform(0.0, box, size=(n, 2))))
    lam_k = circumradius(plane, pts).lambda_k
    d = diameter(plane, pts)
    u = float(rng.uniform(u_lo, u_hi))
    lam = lam_k + u * (2.0 * d - lam_k)
    return Instance(plane, pts, lam, lam_k, d)


def query_points(rng, instance, count):
    """Query mix: uniform over the inflated box plus points hugging the radius."""
    lam = instance.lam
    pts = np.asarray(instance.points)
    lo = pts.min(axis=0) - 1.2 * lam
    hi = pts.max(axis=0) + 1.2 * lam
    qs = list(map(tuple, rng.uniform(lo, hi, size=(count, 2))))
    return qs


def assert_points_close(got, want, tol):
    got = np.asarray(got, dtype=float)
    want = np.asarray(want, dtype=float)
    assert got.shape == want.shape
    np.testing.assert_allclose(got, want, atol=tol, rtol=0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
