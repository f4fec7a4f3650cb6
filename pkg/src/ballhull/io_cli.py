"""Batch CLI: read instance files, run an operation, write JSON and SVG.

Instance files are JSON documents with a norm spec, a point list, and the
scalars the operation needs; a plain ``x y`` per-line text format is also
accepted with flags supplying the rest.  Results are machine-readable JSON
(floats serialized losslessly via repr) plus optional deterministic SVG.

Exit codes: 0 success, 1 malformed input, 2 infeasible or empty result
(the witness is still written).
"""

import argparse
import json
import math
import sys
import time

from . import _kernels
from .arcs import arc_sample, make_arc
from .chains import (
    BoundaryKind,
    ChainBoundary,
    _build_region,
    build_ball_intersection,
    empty_boundary,
    single_point_boundary,
    validate_boundary,
)
from .chebyshev import circumradius, diameter
from .errors import BallhullError, RadiusTooSmallError
from .hull import build_ball_hull, build_ball_hull_dc
from .norms import NormPlane, validate_plane
from .oracle import oracle_bi_membership, oracle_circumradius, oracle_two_center
from .two_center import solve_constrained_two_center


class InputError(Exception):
    """Malformed instance file; message carries a field diagnostic."""


# ---------------------------------------------------------------------------
# instance files

def _check_number(value, field, positive=False):
    if not isinstance(value, (int, float)) or isinstance(value, bool) \
            or not math.isfinite(float(value)):
        raise InputError(f"field {field!r}: expected a finite number, got {value!r}")
    v = float(value)
    if positive and not (v > 0.0):
        raise InputError(f"field {field!r}: must be positive, got {v}")
    return v


def parse_instance(text, path="<input>", defaults=None):
    """Parse a JSON instance or an ``x y`` per-line point list."""
    defaults = defaults or {}
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
        if not isinstance(doc, dict):
            raise InputError(f"{path}: top level must be an object")
        norm = doc.get("norm", {"type": "lp", "p": defaults.get("p", 2.0)})
        if not isinstance(norm, dict) or norm.get("type") != "lp":
            raise InputError(f"{path}: field 'norm': expected {{\"type\": \"lp\", \"p\": ...}}")
        p = _check_number(norm.get("p"), "norm.p")
        raw_pts = doc.get("points")
        if not isinstance(raw_pts, list) or not raw_pts:
            raise InputError(f"{path}: field 'points': expected a non-empty list")
        points = []
        for i, item in enumerate(raw_pts):
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise InputError(f"{path}: points[{i}]: expected [x, y]")
            points.append((_check_number(item[0], f"points[{i}][0]"),
                           _check_number(item[1], f"points[{i}][1]")))
        inst = {"norm": {"type": "lp", "p": p}, "points": points}
        for key in ("lambda", "r", "lambda2"):
            if key in doc and doc[key] is not None:
                inst[key] = _check_number(doc[key], key, positive=True)
            elif defaults.get(key) is not None:
                inst[key] = float(defaults[key])
        return inst
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{path}: line {lineno}: expected 'x y'")
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise InputError(f"{path}: line {lineno}: non-numeric coordinate")
    if not points:
        raise InputError(f"{path}: no points found")
    inst = {"norm": {"type": "lp", "p": float(defaults.get("p", 2.0))}, "points": points}
    for key in ("lambda", "r", "lambda2"):
        if defaults.get(key) is not None:
            inst[key] = float(defaults[key])
    return inst


def _plane_of(inst):
    plane = NormPlane(inst["norm"]["p"])
    try:
        validate_plane(plane)
    except BallhullError as exc:
        raise InputError(f"field 'norm.p': {exc}")
    return plane


def _need(inst, key):
    if key not in inst:
        raise InputError(f"missing field {key!r} (set it in the file or pass --{key})")
    return inst[key]


# ---------------------------------------------------------------------------
# result files

def _ccw_arc_cycle(boundary):
    return list(boundary.lower) + list(reversed(boundary.upper))


def merged_boundary_arcs(boundary):
    """Maximal same-circle arcs of the region, counterclockwise.

    Chain pieces that continue on the same circle across the leftmost or
    rightmost point fuse, so a lens reports two arcs and a full disc one.
    """
    cyc = _ccw_arc_cycle(boundary)
    groups = []
    for awc in cyc:
        if groups and groups[-1][-1].arc.center == awc.arc.center:
            groups[-1].append(awc)
        else:
            groups.append([awc])
    if len(groups) > 1 and groups[0][0].arc.center == groups[-1][0].arc.center:
        groups[0] = groups[-1] + groups[0]
        groups.pop()
    plane = boundary.plane
    out = []
    for grp in groups:
        first, last = grp[0], grp[-1]
        extent = sum(a.arc.extent for a in grp)
        arc = make_arc(plane, first.arc.center, boundary.radius,
                       first.arc.theta_start, first.arc.theta_start + extent,
                       start_point=first.arc.start_point,
                       end_point=last.arc.end_point)
        out.append((arc, first.generating_center))
    start = min(range(len(out)), key=lambda i: out[i][0].start_point)
    return out[start:] + out[:start]


def boundary_to_json(boundary):
    if boundary.is_empty:
        return {"kind": "empty", "radius": boundary.radius}
    if boundary.is_single_point:
        return {"kind": "single_point", "radius": boundary.radius,
                "point": list(boundary.point)}
    arcs = []
    for arc, gen in merged_boundary_arcs(boundary):
        arcs.append({
            "center": list(arc.center),
            "radius": arc.radius,
            "theta_start": arc.theta_start,
            "theta_end": arc.theta_end,
            "endpoints": [list(arc.start_point), list(arc.end_point)],
            "generating_center": list(gen),
        })
    return {"kind": "region", "radius": boundary.radius,
            "arcs": arcs, "vertices": [list(v) for v in boundary.corners]}


def boundary_from_json(plane, doc) -> ChainBoundary:
    """Rebuild a ChainBoundary from its serialized arc records."""
    kind = doc.get("kind")
    radius = _check_number(doc.get("radius"), "boundary.radius", positive=True)
    if kind == "empty":
        return empty_boundary(radius)
    if kind == "single_point":
        return single_point_boundary(tuple(doc["point"]), radius, plane=plane)
    if kind != "region":
        raise InputError(f"boundary.kind: unknown kind {kind!r}")
    upper_pieces = []
    lower_pieces = []
    for rec in doc.get("arcs", []):
        cx, cy = rec["center"]
        ts, te = float(rec["theta_start"]), float(rec["theta_end"])
        sp = tuple(rec["endpoints"][0])
        ep = tuple(rec["endpoints"][1])
        # split into single-branch pieces at horizontal extremes of the circle
        cuts = [ts]
        k = math.floor(ts / math.pi) + 1
        while k * math.pi < te - 1e-12:
            if k * math.pi > ts + 1e-12:
                cuts.append(k * math.pi)
            k += 1
        cuts.append(te)
        for th_a, th_b in zip(cuts[:-1], cuts[1:]):
            pa = sp if th_a == ts else _extreme_point(cx, cy, radius, th_a)
            pb = ep if th_b == te else _extreme_point(cx, cy, radius, th_b)
            mid = 0.5 * (th_a + th_b)
            if (mid % (2.0 * math.pi)) < math.pi:
                upper_pieces.append([cx, cy, pb, pa])
            else:
                lower_pieces.append([cx, cy, pa, pb])
    if not upper_pieces or not lower_pieces:
        raise InputError("boundary.arcs: region must touch both chains")
    upper_pieces.sort(key=lambda pc: pc[2][0])
    lower_pieces.sort(key=lambda pc: pc[2][0])
    return _build_region(plane, radius, upper_pieces, lower_pieces)


def _extreme_point(cx, cy, radius, theta):
    if abs(math.remainder(theta, 2.0 * math.pi)) < 1e-9:
        return (cx + radius, cy)
    return (cx - radius, cy)


def result_document(inst, command, result, started):
    return {
        "instance": {
            "norm": inst["norm"],
            "points": [list(q) for q in inst["points"]],
            **{k: inst[k] for k in ("lambda", "r", "lambda2") if k in inst},
        },
        "command": command,
        "result": result,
        "timing_s": time.perf_counter() - started,
    }


def write_result(doc, path):
    payload = json.dumps(doc, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


# ---------------------------------------------------------------------------
# svg

_SVG_LAYERS = (
    ("boundary", "#1f77b4"),
    ("points", "#d62728"),
    ("vertices", "#2ca02c"),
    ("arc-centers", "#9467bd"),
)


def _fmt(v):
    return f"{v:.6f}"


def render_svg(result_doc, samples: int = 64) -> str:
    """Deterministic SVG for a result document: points, boundary, vertices, centers."""
    inst = result_doc["instance"]
    plane = NormPlane(inst["norm"]["p"])
    points = [tuple(q) for q in inst["points"]]
    res = result_doc.get("result", {})
    bdoc = res.get("boundary")

    polylines = []
    vertices = []
    centers = []
    extra_pts = []
    if bdoc and bdoc.get("kind") == "region":
        radius = float(bdoc["radius"])
        for rec in bdoc["arcs"]:
            arc = make_arc(plane, tuple(rec["center"]), radius,
                           float(rec["theta_start"]), float(rec["theta_end"]),
                           start_point=tuple(rec["endpoints"][0]),
                           end_point=tuple(rec["endpoints"][1]))
            polylines.append(arc_sample(arc, samples))
            centers.append(tuple(rec["generating_center"]))
        vertices = [tuple(v) for v in bdoc.get("vertices", [])]
    elif bdoc and bdoc.get("kind") == "single_point":
        extra_pts = [tuple(bdoc["point"])]

    everything = points + vertices + centers + extra_pts + [q for line in polylines for q in line]
    xs = [q[0] for q in everything]
    ys = [q[1] for q in everything]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    pad = 0.05 * span
    x0, y0 = min(xs) - pad, min(ys) - pad
    x1, y1 = max(xs) + pad, max(ys) + pad
    dot = span / 150.0

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}">',
    ]
    parts.append(f'<g id="boundary" fill="none" stroke="{_SVG_LAYERS[0][1]}" '
                 f'stroke-width="{_fmt(dot / 2)}">')
    for line in polylines:
        coords = " ".join(f"{_fmt(q[0])},{_fmt(-q[1])}" for q in line)
        parts.append(f'<polyline points="{coords}" />')
    parts.append("</g>")
    parts.append(f'<g id="points" fill="{_SVG_LAYERS[1][1]}">')
    for q in points + extra_pts:
        parts.append(f'<circle cx="{_fmt(q[0])}" cy="{_fmt(-q[1])}" r="{_fmt(dot)}" />')
    parts.append("</g>")
    parts.append(f'<g id="vertices" fill="{_SVG_LAYERS[2][1]}">')
    for q in vertices:
        parts.append(f'<circle cx="{_fmt(q[0])}" cy="{_fmt(-q[1])}" r="{_fmt(dot * 0.8)}" />')
    parts.append("</g>")
    parts.append(f'<g id="arc-centers" fill="{_SVG_LAYERS[3][1]}">')
    for q in centers:
        parts.append(f'<circle cx="{_fmt(q[0])}" cy="{_fmt(-q[1])}" r="{_fmt(dot * 0.6)}" />')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# subcommands

def _cmd_boundary(inst, command, tol):
    plane = _plane_of(inst)
    lam = _need(inst, "lambda")
    started = time.perf_counter()
    scalars = {"diam": diameter(plane, inst["points"])}
    if command == "bi":
        boundary = build_ball_intersection(plane, inst["points"], lam)
        if boundary.is_empty:
            scalars["lambda_k"] = circumradius(plane, inst["points"], tol).lambda_k
            result = {"kind": "empty", "boundary": boundary_to_json(boundary),
                      "scalars": scalars}
            return 2, result_document(inst, command, result, started)
    else:
        builder = build_ball_hull if command == "bh" else build_ball_hull_dc
        try:
            boundary = builder(plane, inst["points"], lam).boundary
        except RadiusTooSmallError:
            scalars["lambda_k"] = circumradius(plane, inst["points"], tol).lambda_k
            result = {"kind": "empty", "boundary": boundary_to_json(empty_boundary(lam)),
                      "scalars": scalars}
            return 2, result_document(inst, command, result, started)
    result = {"kind": boundary.kind.value, "boundary": boundary_to_json(boundary),
              "scalars": scalars}
    return 0, result_document(inst, command, result, started)


def _cmd_chebyshev(inst, tol):
    plane = _plane_of(inst)
    started = time.perf_counter()
    res = circumradius(plane, inst["points"], tol)
    result = {
        "kind": res.chebyshev_set.kind.value,
        "boundary": boundary_to_json(res.chebyshev_set),
        "scalars": {"lambda_k": res.lambda_k,
                    "diam": diameter(plane, inst["points"]),
                    "iterations": res.iterations,
                    "residual": res.residual},
    }
    return 0, result_document(inst, "chebyshev", result, started)


def _cmd_two_center(inst):
    plane = _plane_of(inst)
    r = _need(inst, "r")
    lam2 = _need(inst, "lambda2")
    started = time.perf_counter()
    ans = solve_constrained_two_center(plane, inst["points"], r, lam2)
    if ans.feasible:
        result = {"kind": "feasible",
                  "two_center": {"big_center": list(ans.big_center),
                                 "small_center": list(ans.small_center),
                                 "single_disc": ans.single_disc}}
        return 0, result_document(inst, "two-center", result, started)
    result = {"kind": "infeasible",
              "two_center": {"witness_center": list(ans.witness_center),
                             "uncovered_witness": [list(q) for q in ans.uncovered_witness]}}
    return 2, result_document(inst, "two-center", result, started)


def _cmd_oracle_check(seed, count):
    import numpy as np

    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    failures = []
    checks = 0
    for idx in range(count):
        p = float(rng.choice([1.5, 2.0, 3.0, 8.0]))
        plane = NormPlane(p)
        n = int(rng.integers(3, 11))
        pts = [tuple(q) for q in rng.uniform(0.0, 10.0, size=(n, 2))]
        lam_k = circumradius(plane, pts).lambda_k
        diam = diameter(plane, pts)
        lam = lam_k + float(rng.uniform(0.0, 1.0)) * (2.0 * diam - lam_k)
        boundary = build_ball_intersection(plane, pts, lam)
        from .chains import region_margin

        for q in rng.uniform(-2.0, 12.0, size=(50, 2)):
            q = tuple(q)
            margin = region_margin(plane, boundary, q)
            if abs(margin) <= 1e-6 * lam:
                continue
            checks += 1
            if (margin < 0) != oracle_bi_membership(plane, pts, lam, q):
                failures.append({"instance": idx, "check": "bi", "query": list(q)})
        if n <= 8:
            checks += 1
            if abs(lam_k - oracle_circumradius(plane, pts)) > 1e-7:
                failures.append({"instance": idx, "check": "circumradius"})
        r = float(rng.uniform(0.3, 1.2)) * diam
        lam2 = r * float(rng.uniform(0.3, 1.0))
        checks += 1
        fast = solve_constrained_two_center(plane, pts, r, lam2)
        slow = oracle_two_center(plane, pts, r, lam2)
        if fast.feasible != slow.feasible:
            failures.append({"instance": idx, "check": "two-center"})
    result = {"kind": "oracle-check", "seed": seed, "instances": count,
              "checks": checks, "failures": failures}
    doc = {"command": "oracle-check", "result": result,
           "timing_s": time.perf_counter() - started}
    return (0 if not failures else 2), doc


def _cmd_render(args):
    try:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{args.input}: {exc}")
    svg = render_svg(doc, samples=args.samples_per_arc)
    out = args.svg or (args.input + ".svg")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0, None


# ---------------------------------------------------------------------------
# entry point

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ballhull",
        description="Ball hulls, ball intersections, Chebyshev sets and the "
                    "constrained 2-center problem in strictly convex Lp planes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("bi", "bh", "bh-dc", "chebyshev", "two-center", "oracle-check", "render"):
        sp = sub.add_parser(name)
        sp.add_argument("--input", help="instance file (JSON or 'x y' lines)")
        sp.add_argument("--output", help="result JSON path (default stdout)")
        sp.add_argument("--svg", help="also render the result to this SVG path")
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--samples-per-arc", type=int, default=64)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--instances", type=int, default=20,
                        help="instance count for oracle-check")
        sp.add_argument("--p", type=float, default=None,
                        help="norm exponent for text inputs")
        sp.add_argument("--lambda", dest="lam", type=float, default=None)
        sp.add_argument("--r", type=float, default=None)
        sp.add_argument("--lambda2", type=float, default=None)
    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "render":
            code, _ = _cmd_render(args)
            return code
        if args.command == "oracle-check":
            code, doc = _cmd_oracle_check(args.seed, args.instances)
        else:
            if not args.input:
                raise InputError("--input is required")
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"{args.input}: {exc}")
            defaults = {"p": args.p if args.p is not None else 2.0,
                        "lambda": args.lam, "r": args.r, "lambda2": args.lambda2}
            inst = parse_instance(text, path=args.input, defaults=defaults)
            if args.command in ("bi", "bh", "bh-dc"):
                code, doc = _cmd_boundary(inst, args.command, args.tol)
            elif args.command == "chebyshev":
                code, doc = _cmd_chebyshev(inst, args.tol)
            elif args.command == "two-center":
                code, doc = _cmd_two_center(inst)
            else:  # pragma: no cover
                raise InputError(f"unknown command {args.command}")
        write_result(doc, args.output)
        if args.svg and args.command != "render":
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(render_svg(doc, samples=args.samples_per_arc))
        return code
    except InputError as exc:
        print(f"ballhull: error: {exc}", file=sys.stderr)
        return 1
    except BallhullError as exc:
        print(f"ballhull: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
