"""Machine-readable outputs: support-profile CSV and boundary SVG."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .errors import InputError
from .numrange import SupportProfile

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(v: float) -> str:
    return "%.17g" % (float(v) + 0.0)


def emit_support_csv(profile: SupportProfile, path) -> None:
    """Write ``theta,h`` rows at full double precision (LF, UTF-8)."""
    rows = ["theta,h"] + [f"{_fmt(t)},{_fmt(h)}" for t, h in zip(profile.thetas, profile.values)]
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8", newline="\n")


def read_support_csv(path, label: str = "") -> SupportProfile:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != "theta,h":
        raise InputError(f"{path}: expected header 'theta,h'")
    thetas, values = [], []
    for line in lines[1:]:
        t, h = line.split(",")
        thetas.append(float(t))
        values.append(float(h))
    return SupportProfile(np.array(thetas), np.array(values), label)


def emit_table_csv(columns: dict, path) -> None:
    """Equal-length numeric columns as CSV, header from the dict keys."""
    names = list(columns)
    data = [np.asarray(columns[k]) for k in names]
    rows = [",".join(names)]
    for i in range(len(data[0])):
        rows.append(",".join(_fmt(col[i]) for col in data))
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8", newline="\n")


def emit_boundary_csv(sets: dict, thetas, path) -> None:
    rows = ["set,theta,re,im"]
    for label, points in sets.items():
        for th, z in zip(thetas, points):
            rows.append(f"{label},{_fmt(th)},{_fmt(z.real)},{_fmt(z.imag)}")
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8", newline="\n")


def convex_hull(points, eps: float = 1e-9) -> list[complex]:
    """Counter-clockwise hull vertices by Andrew's monotone chain.

    Points closer than ``eps`` (relative to the data extent) are merged and
    nearly collinear vertices are dropped.
    """
    pts = sorted({(float(z.real), float(z.imag)) for z in points})
    if not pts:
        return []
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    extent = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    tol = eps * extent

    merged = [pts[0]]
    for p in pts[1:]:
        if math.hypot(p[0] - merged[-1][0], p[1] - merged[-1][1]) > tol:
            merged.append(p)
    if len(merged) < 3:
        return [complex(*p) for p in merged]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= tol * extent:
                out.pop()
            out.append(p)
        return out

    lower = chain(merged)
    upper = chain(reversed(merged))
    hull = lower[:-1] + upper[:-1]
    return [complex(*p) for p in hull]


def _svg_point(z: complex) -> str:
    return f"{z.real:.9g},{-z.imag:.9g}"


def emit_boundary_svg(sets: dict, path, hull_eps: float = 1e-9) -> list[complex]:
    """Standalone SVG with one closed polyline per sample set and their hull.

    ``sets`` maps a label to its boundary samples (complex points).  A set
    whose samples all coincide is drawn as a dot.  Returns the hull vertices.
    """
    if not sets:
        raise InputError("no sample sets to draw")
    for label, pts in sets.items():
        pts = [complex(z) for z in pts]
        if not pts:
            raise InputError(f"sample set {label!r} is empty")
        if len(pts) < 3 and any(z != pts[0] for z in pts):
            raise InputError(f"sample set {label!r} needs at least 3 points")
    all_points = [complex(z) for pts in sets.values() for z in pts]
    xs = [z.real for z in all_points]
    ys = [-z.imag for z in all_points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0)
    if span == 0:
        span = 1.0
    margin = 0.05 * span
    vx, vy = x0 - margin, y0 - margin
    vw, vh = (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin
    vw = vw if vw > 2 * margin else span + 2 * margin
    vh = vh if vh > 2 * margin else span + 2 * margin
    stroke = span / 200.0

    hull = convex_hull(all_points, hull_eps)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.9g} {vy:.9g} {vw:.9g} {vh:.9g}" '
        'width="600" height="600">',
    ]
    if len(hull) >= 3:
        pts = " ".join(_svg_point(z) for z in hull)
        parts.append(
            f'  <polygon class="hull" points="{pts}" fill="#999999" fill-opacity="0.2" '
            f'stroke="#333333" stroke-width="{stroke:.6g}"/>'
        )
    for i, (label, samples) in enumerate(sets.items()):
        color = COLORS[i % len(COLORS)]
        samples = [complex(z) for z in samples]
        spread = max(abs(z - samples[0]) for z in samples)
        if spread <= hull_eps * span:
            z = samples[0]
            parts.append(
                f'  <circle class="point" data-label="{label}" cx="{z.real:.9g}" cy="{-z.imag:.9g}" '
                f'r="{3 * stroke:.6g}" fill="{color}"/>'
            )
            continue
        pts = " ".join(_svg_point(z) for z in samples + samples[:1])
        parts.append(
            f'  <polyline class="boundary" data-label="{label}" points="{pts}" fill="none" '
            f'stroke="{color}" stroke-width="{stroke:.6g}"/>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8", newline="\n")
    return hull
