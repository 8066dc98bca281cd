"""Shared 2D geometry helpers: angle wrapping, unicycle arcs, ray casting
against segment/circle obstacle sets, and point/polyline distances."""

from __future__ import annotations

import numpy as np


def wrap_angle(theta):
    """Wrap angle(s) to (-pi, pi]."""
    w = np.mod(np.asarray(theta, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    w = np.where(w == -np.pi, np.pi, w)
    if np.isscalar(theta) or np.ndim(theta) == 0:
        return float(w)
    return w


def unicycle_arc(x: float, y: float, theta: float, v: float, omega: float, dt: float):
    """Advance a unicycle pose by constant (v, omega) over dt.

    Uses the exact arc solution; falls back to the straight-line limit
    for |omega * dt| below 1e-10.
    """
    dth = omega * dt
    if abs(dth) < 1e-10:
        # second-order correction keeps the limit smooth
        dx_local = v * dt
        dy_local = 0.5 * v * dt * dth
    else:
        r = v / omega
        dx_local = r * np.sin(dth)
        dy_local = r * (1.0 - np.cos(dth))
    c, s = np.cos(theta), np.sin(theta)
    return (
        x + c * dx_local - s * dy_local,
        y + s * dx_local + c * dy_local,
        wrap_angle(theta + dth),
    )


def rects_to_segments(rects: np.ndarray) -> np.ndarray:
    """Explode axis-aligned rects (N,4) as (xmin,ymin,xmax,ymax) into edge
    segments (4N,4) as (x1,y1,x2,y2)."""
    rects = np.asarray(rects, dtype=float).reshape(-1, 4)
    x0, y0, x1, y1 = rects.T
    segs = np.empty((len(rects) * 4, 4))
    segs[0::4] = np.column_stack([x0, y0, x1, y0])
    segs[1::4] = np.column_stack([x1, y0, x1, y1])
    segs[2::4] = np.column_stack([x1, y1, x0, y1])
    segs[3::4] = np.column_stack([x0, y1, x0, y0])
    return segs


def raycast(
    origins: np.ndarray,
    angles: np.ndarray,
    segments: np.ndarray,
    circles: np.ndarray,
    max_range: float,
) -> np.ndarray:
    """Cast rays from origins (M,2) along angles (M,) against segments (S,4)
    and circles (C,3); returns hit distances (M,) clipped to max_range."""
    origins = np.asarray(origins, dtype=float).reshape(-1, 2)
    angles = np.asarray(angles, dtype=float).reshape(-1)
    m = len(angles)
    dist = np.full(m, max_range)
    dx = np.cos(angles)
    dy = np.sin(angles)

    if len(segments):
        # ray p + t*d vs segment a + u*(b-a); solve 2x2 per pair
        ax, ay, bx, by = segments.T
        ex = bx - ax
        ey = by - ay
        # denominator d x e (M,S)
        denom = dx[:, None] * ey[None, :] - dy[:, None] * ex[None, :]
        rx = ax[None, :] - origins[:, 0:1]
        ry = ay[None, :] - origins[:, 1:2]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (rx * ey[None, :] - ry * ex[None, :]) / denom
            u = (rx * dy[:, None] - ry * dx[:, None]) / denom
        valid = (np.abs(denom) > 1e-12) & (t > 1e-9) & (u >= 0.0) & (u <= 1.0)
        t = np.where(valid, t, np.inf)
        dist = np.minimum(dist, t.min(axis=1))

    if len(circles):
        cx, cy, r = circles.T
        fx = origins[:, 0:1] - cx[None, :]
        fy = origins[:, 1:2] - cy[None, :]
        b = fx * dx[:, None] + fy * dy[:, None]
        c = fx * fx + fy * fy - (r * r)[None, :]
        disc = b * b - c
        with np.errstate(invalid="ignore"):
            sq = np.sqrt(np.maximum(disc, 0.0))
        t1 = -b - sq
        t2 = -b + sq
        t1 = np.where((disc >= 0.0) & (t1 > 1e-9), t1, np.inf)
        t2 = np.where((disc >= 0.0) & (t2 > 1e-9), t2, np.inf)
        dist = np.minimum(dist, np.minimum(t1, t2).min(axis=1))

    return np.minimum(dist, max_range)


def circle_hits_obstacles(
    x: float, y: float, radius: float, rects: np.ndarray, circles: np.ndarray
) -> bool:
    """True if a robot disc at (x, y) intersects any rect or circle obstacle."""
    if len(rects):
        px = np.clip(x, rects[:, 0], rects[:, 2])
        py = np.clip(y, rects[:, 1], rects[:, 3])
        d2 = (px - x) ** 2 + (py - y) ** 2
        if np.any(d2 < radius * radius):
            return True
    if len(circles):
        d2 = (circles[:, 0] - x) ** 2 + (circles[:, 1] - y) ** 2
        rr = (circles[:, 2] + radius) ** 2
        if np.any(d2 < rr):
            return True
    return False


def clearance(
    x: float, y: float, rects: np.ndarray, circles: np.ndarray
) -> float:
    """Distance from a point to the nearest obstacle surface (negative inside)."""
    best = np.inf
    if len(rects):
        px = np.clip(x, rects[:, 0], rects[:, 2])
        py = np.clip(y, rects[:, 1], rects[:, 3])
        d = np.hypot(px - x, py - y)
        inside = (x > rects[:, 0]) & (x < rects[:, 2]) & (y > rects[:, 1]) & (y < rects[:, 3])
        d = np.where(inside, -1.0, d)
        best = min(best, float(d.min()))
    if len(circles):
        d = np.hypot(circles[:, 0] - x, circles[:, 1] - y) - circles[:, 2]
        best = min(best, float(d.min()))
    return best


def point_segment_distance(px, py, x1, y1, x2, y2):
    """Distance from point(s) to segment(s); broadcasts over numpy inputs."""
    ex = x2 - x1
    ey = y2 - y1
    len2 = ex * ex + ey * ey
    with np.errstate(divide="ignore", invalid="ignore"):
        t = ((px - x1) * ex + (py - y1) * ey) / len2
    t = np.where(len2 > 0, np.clip(t, 0.0, 1.0), 0.0)
    cx = x1 + t * ex
    cy = y1 + t * ey
    return np.hypot(px - cx, py - cy)


def polyline_lengths(points: np.ndarray) -> np.ndarray:
    """Cumulative arc length along a polyline (T,2); starts at 0."""
    points = np.asarray(points, dtype=float)
    if len(points) < 2:
        return np.zeros(len(points))
    steps = np.hypot(np.diff(points[:, 0]), np.diff(points[:, 1]))
    return np.concatenate([[0.0], np.cumsum(steps)])


def point_to_polyline_distance(px: float, py: float, polyline: np.ndarray) -> float:
    """Minimum distance from a point to a polyline (T,2)."""
    pts = np.asarray(polyline, dtype=float)
    if len(pts) == 1:
        return float(np.hypot(px - pts[0, 0], py - pts[0, 1]))
    d = point_segment_distance(
        px, py, pts[:-1, 0], pts[:-1, 1], pts[1:, 0], pts[1:, 1]
    )
    return float(np.min(d))


def project_onto_segment_arc(px, py, x1, y1, x2, y2) -> float:
    """Arc-length position of the projection of a point onto one segment."""
    ex = x2 - x1
    ey = y2 - y1
    len2 = ex * ex + ey * ey
    if len2 <= 0:
        return 0.0
    t = np.clip(((px - x1) * ex + (py - y1) * ey) / len2, 0.0, 1.0)
    return float(t * np.sqrt(len2))
