"""Hot numeric kernels: Lp norms, sphere parametrization, circle intersection.

Every kernel exists in two variants compiled from the same source: a numba
``@njit`` build and the plain interpreted (numpy/math) build.  The active
variant is chosen at import time by the ``BALLHULL_NUMBA`` environment
variable and can be swapped at runtime with :func:`use_backend` (used by the
benchmark and the backend-equivalence tests).

``BALLHULL_NUMBA=0`` forces the pure-Python/numpy path, ``BALLHULL_NUMBA=1``
requires numba (ImportError if missing), unset means "numba when available".
"""

import math
import os

# Angular bisection floor for circle-circle intersections: brackets are
# narrowed until their width drops below this many radians.
THETA_WIDTH = 1e-13

# Two intersection roots closer than this (relative to the radius) in output
# space collapse to their midpoint.
TANGENCY_BAND = 1e-9


def _lp_norm(x, y, p):
    """Lp norm of the vector (x, y), scaled to avoid overflow for large p."""
    if p == 2.0:
        return math.hypot(x, y)
    ax = abs(x)
    ay = abs(y)
    m = ax if ax >= ay else ay
    if m == 0.0:
        return 0.0
    return m * ((ax / m) ** p + (ay / m) ** p) ** (1.0 / p)


def _unit_upper(t, p):
    """Height of the upper unit-ball boundary at abscissa t, clamped to [-1, 1]."""
    a = abs(t)
    if a >= 1.0:
        return 0.0
    if p == 2.0:
        return math.sqrt((1.0 - t) * (1.0 + t))
    return (1.0 - a ** p) ** (1.0 / p)


def _upper_y(cx, cy, lam, p, x):
    """y of the upper boundary of the radius-lam disc at center (cx, cy)."""
    return cy + lam * _unit_upper((x - cx) / lam, p)


def _lower_y(cx, cy, lam, p, x):
    """y of the lower boundary of the radius-lam disc at center (cx, cy)."""
    return cy - lam * _unit_upper((x - cx) / lam, p)


def _sphere_point_xy(cx, cy, lam, theta, p):
    """Point of the radius-lam sphere around (cx, cy) in direction theta."""
    ux = math.cos(theta)
    uy = math.sin(theta)
    n = _lp_norm(ux, uy, p)
    return cx + lam * ux / n, cy + lam * uy / n


def _circle_gap(c1x, c1y, c2x, c2y, lam, p, theta):
    """Signed distance defect of the theta-point of circle 1 from circle 2."""
    wx, wy = _sphere_point_xy(c1x, c1y, lam, theta, p)
    return _lp_norm(wx - c2x, wy - c2y, p) - lam


def _bisect_gap(c1x, c1y, c2x, c2y, lam, p, lo, hi):
    """Root of the gap function on [lo, hi]; the endpoint signs must differ.

    The gap is negative at lo xor hi; bisection runs to THETA_WIDTH.
    """
    glo = _circle_gap(c1x, c1y, c2x, c2y, lam, p, lo)
    for _ in range(64):
        if hi - lo <= THETA_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        gm = _circle_gap(c1x, c1y, c2x, c2y, lam, p, mid)
        if (gm > 0.0) == (glo > 0.0):
            lo = mid
            glo = gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _circle_intersections(c1x, c1y, c2x, c2y, lam, p):
    """Intersection points of two radius-lam circles in the Lp plane.

    Returns (count, x1, y1, x2, y2).  count is 0, 1 or 2; unused slots are 0.
    For two points the first is the root counterclockwise before the
    direction toward c2, the second after it.  Coincident centers must be
    rejected by the caller.

    Strict convexity gives exactly two roots for center distance d < 2*lam
    and one (the segment midpoint) at d = 2*lam.  The gap function is
    negative in the direction of c2 (value d - 2*lam) and positive in the
    opposite direction (value d), which brackets one root on each side.
    """
    dx = c2x - c1x
    dy = c2y - c1y
    d = _lp_norm(dx, dy, p)
    two = 2.0 * lam
    if d > two * (1.0 + 1e-12):
        return 0, 0.0, 0.0, 0.0, 0.0
    if d >= two:
        # no strict sign change left; the tangency point is the midpoint
        return 1, 0.5 * (c1x + c2x), 0.5 * (c1y + c2y), 0.0, 0.0
    t_star = math.atan2(dy, dx)
    th1 = _bisect_gap(c1x, c1y, c2x, c2y, lam, p, t_star - math.pi, t_star)
    th2 = _bisect_gap(c1x, c1y, c2x, c2y, lam, p, t_star, t_star + math.pi)
    x1, y1 = _sphere_point_xy(c1x, c1y, lam, th1, p)
    x2, y2 = _sphere_point_xy(c1x, c1y, lam, th2, p)
    if _lp_norm(x1 - x2, y1 - y2, p) < TANGENCY_BAND * lam:
        return 1, 0.5 * (x1 + x2), 0.5 * (y1 + y2), 0.0, 0.0
    return 2, x1, y1, x2, y2


def _upper_crossing(ax, ay, qx, qy, lam, p):
    """Crossing of the upper disc boundaries of centers a and q.

    Returns (found, x, y).  found is 1 when the two upper boundary graphs
    cross; the crossing is the circle intersection point lying on the upper
    branch of both circles, i.e. the one with the larger y.
    """
    n, x1, y1, x2, y2 = _circle_intersections(ax, ay, qx, qy, lam, p)
    if n == 0:
        return 0, 0.0, 0.0
    if n == 2 and y2 > y1:
        x1, y1 = x2, y2
    eps = 1e-12 * lam
    if y1 >= ay - eps and y1 >= qy - eps:
        return 1, x1, y1
    return 0, 0.0, 0.0


_PY_NAMES = (
    "lp_norm",
    "unit_upper",
    "upper_y",
    "lower_y",
    "sphere_point_xy",
    "circle_gap",
    "circle_intersections",
    "upper_crossing",
)

_py_impl = {
    "lp_norm": _lp_norm,
    "unit_upper": _unit_upper,
    "upper_y": _upper_y,
    "lower_y": _lower_y,
    "sphere_point_xy": _sphere_point_xy,
    "circle_gap": _circle_gap,
    "circle_intersections": _circle_intersections,
    "upper_crossing": _upper_crossing,
}

_env = os.environ.get("BALLHULL_NUMBA", "").strip().lower()
if _env in ("0", "false", "off", "no"):
    numba = None
elif _env in ("1", "true", "on", "yes"):
    import numba
else:
    try:
        import numba
    except ImportError:  # pragma: no cover - exercised via env flag instead
        numba = None

_jit_impl = None
if numba is not None:
    _njit = numba.njit(cache=True)
    _j_lp_norm = _njit(_lp_norm)
    _j_unit_upper = _njit(_unit_upper)

    # The jitted call tree is rebuilt so inner calls bind to jitted symbols.
    @_njit
    def _j_upper_y(cx, cy, lam, p, x):
        return cy + lam * _j_unit_upper((x - cx) / lam, p)

    @_njit
    def _j_lower_y(cx, cy, lam, p, x):
        return cy - lam * _j_unit_upper((x - cx) / lam, p)

    @_njit
    def _j_sphere_point_xy(cx, cy, lam, theta, p):
        ux = math.cos(theta)
        uy = math.sin(theta)
        n = _j_lp_norm(ux, uy, p)
        return cx + lam * ux / n, cy + lam * uy / n

    @_njit
    def _j_circle_gap(c1x, c1y, c2x, c2y, lam, p, theta):
        wx, wy = _j_sphere_point_xy(c1x, c1y, lam, theta, p)
        return _j_lp_norm(wx - c2x, wy - c2y, p) - lam

    @_njit
    def _j_bisect_gap(c1x, c1y, c2x, c2y, lam, p, lo, hi):
        glo = _j_circle_gap(c1x, c1y, c2x, c2y, lam, p, lo)
        for _ in range(64):
            if hi - lo <= THETA_WIDTH:
                break
            mid = 0.5 * (lo + hi)
            gm = _j_circle_gap(c1x, c1y, c2x, c2y, lam, p, mid)
            if (gm > 0.0) == (glo > 0.0):
                lo = mid
                glo = gm
            else:
                hi = mid
        return 0.5 * (lo + hi)

    @_njit
    def _j_circle_intersections(c1x, c1y, c2x, c2y, lam, p):
        dx = c2x - c1x
        dy = c2y - c1y
        d = _j_lp_norm(dx, dy, p)
        two = 2.0 * lam
        if d > two * (1.0 + 1e-12):
            return 0, 0.0, 0.0, 0.0, 0.0
        if d >= two:
            return 1, 0.5 * (c1x + c2x), 0.5 * (c1y + c2y), 0.0, 0.0
        t_star = math.atan2(dy, dx)
        th1 = _j_bisect_gap(c1x, c1y, c2x, c2y, lam, p, t_star - math.pi, t_star)
        th2 = _j_bisect_gap(c1x, c1y, c2x, c2y, lam, p, t_star, t_star + math.pi)
        x1, y1 = _j_sphere_point_xy(c1x, c1y, lam, th1, p)
        x2, y2 = _j_sphere_point_xy(c1x, c1y, lam, th2, p)
        if _j_lp_norm(x1 - x2, y1 - y2, p) < TANGENCY_BAND * lam:
            return 1, 0.5 * (x1 + x2), 0.5 * (y1 + y2), 0.0, 0.0
        return 2, x1, y1, x2, y2

    @_njit
    def _j_upper_crossing(ax, ay, qx, qy, lam, p):
        n, x1, y1, x2, y2 = _j_circle_intersections(ax, ay, qx, qy, lam, p)
        if n == 0:
            return 0, 0.0, 0.0
        if n == 2 and y2 > y1:
            x1, y1 = x2, y2
        eps = 1e-12 * lam
        if y1 >= ay - eps and y1 >= qy - eps:
            return 1, x1, y1
        return 0, 0.0, 0.0

    _jit_impl = {
        "lp_norm": _j_lp_norm,
        "unit_upper": _j_unit_upper,
        "upper_y": _j_upper_y,
        "lower_y": _j_lower_y,
        "sphere_point_xy": _j_sphere_point_xy,
        "circle_gap": _j_circle_gap,
        "circle_intersections": _j_circle_intersections,
        "upper_crossing": _j_upper_crossing,
    }

_backend = "numba" if _jit_impl is not None else "numpy"


def backend_name():
    """Name of the active kernel backend: 'numba' or 'numpy'."""
    return _backend


def available_backends():
    return ("numba", "numpy") if _jit_impl is not None else ("numpy",)


def use_backend(name):
    """Switch the active kernel set.  Returns the previous backend name."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and _jit_impl is None:
        raise RuntimeError("numba backend requested but numba is not importable")
    previous = _backend
    impl = _jit_impl if name == "numba" else _py_impl
    for fname in _PY_NAMES:
        globals()[fname] = impl[fname]
    _backend = name
    return previous


use_backend(_backend)
