"""Slow reference implementations used only to cross-check the package.

Everything here is deliberately naive: Monte Carlo areas, cubic-time
enclosing circles, golden-section search. Tests compare the fast library
code against these with explicit tolerances.
"""
from __future__ import annotations

import math

import numpy as np


def mc_area_disks(centers, radius: float, n: int = 400_000,
                  seed: int = 0) -> float:
    """Monte Carlo area of an intersection of equal-radius disks."""
    cs = np.asarray(centers, dtype=float)
    lo = cs.min(axis=0) - radius
    hi = cs.max(axis=0) + radius
    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, size=(n, 2))
    inside = np.ones(n, dtype=bool)
    for c in cs:
        d2 = (pts[:, 0] - c[0]) ** 2 + (pts[:, 1] - c[1]) ** 2
        inside &= d2 <= radius * radius
    box = float(np.prod(hi - lo))
    return box * float(inside.mean())


def mc_area_region(region, n: int = 400_000, seed: int = 0) -> float:
    """Monte Carlo area of an intersection-of-disks region.

    Works because every region produced by the library is an intersection
    of the disks carrying its arcs.
    """
    if region.is_degenerate:
        return 0.0
    centers = [(a.center.x, a.center.y) for a in region.arcs]
    radius = region.arcs[0].radius
    return mc_area_disks(centers, radius, n=n, seed=seed)


def _circle_from3(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-30:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
          + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
          + (cx * cx + cy * cy) * (bx - ax)) / d
    r = math.hypot(ax - ux, ay - uy)
    return (ux, uy), r


def brute_mec(points):
    """O(n^3) minimum enclosing circle: try all pairs and triples."""
    pts = [(float(x), float(y)) for x, y in points]

    def covers(center, r):
        cx, cy = center
        pad = r + 1e-12
        return all(math.hypot(x - cx, y - cy) <= pad for x, y in pts)

    best = None
    if len(pts) == 1:
        return pts[0], 0.0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            cx = (pts[i][0] + pts[j][0]) / 2.0
            cy = (pts[i][1] + pts[j][1]) / 2.0
            r = math.hypot(pts[i][0] - cx, pts[i][1] - cy)
            if covers((cx, cy), r) and (best is None or r < best[1]):
                best = ((cx, cy), r)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for k in range(j + 1, len(pts)):
                got = _circle_from3(pts[i], pts[j], pts[k])
                if got is None:
                    continue
                c, r = got
                if covers(c, r) and (best is None or r < best[1]):
                    best = (c, r)
    assert best is not None
    return best


def golden_min(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Golden-section minimizer for a unimodal scalar function."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def central_fd(f, x: float, eps: float) -> float:
    return (f(x + eps) - f(x - eps)) / (2.0 * eps)
