"""Planar primitives shared by the solvers.

Everything here uses closed-set semantics: touching a boundary counts as
being inside. Predicates take an absolute tolerance ``tol``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

TOL = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def swapped(self) -> "Point":
        return Point(self.y, self.x)


@dataclass(frozen=True)
class Segment:
    """Closed segment with unordered endpoints ``u`` and ``v``."""

    u: Point
    v: Point

    @classmethod
    def of(cls, x1, y1, x2, y2) -> "Segment":
        return cls(Point(float(x1), float(y1)), Point(float(x2), float(y2)))

    @property
    def lp(self) -> Point:
        return self.u if self.u.x <= self.v.x else self.v

    @property
    def rp(self) -> Point:
        return self.v if self.u.x <= self.v.x else self.u

    @property
    def bp(self) -> Point:
        return self.u if self.u.y <= self.v.y else self.v

    @property
    def tp(self) -> Point:
        return self.v if self.u.y <= self.v.y else self.u

    def other(self, p: Point) -> Point:
        return self.v if p == self.u else self.u

    def at(self, t: float) -> Point:
        return Point(self.u.x + t * (self.v.x - self.u.x), self.u.y + t * (self.v.y - self.u.y))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.u.x, self.u.y, self.v.x, self.v.y)

    def swapped(self) -> "Segment":
        return Segment(self.u.swapped(), self.v.swapped())

    @property
    def is_point(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Rect:
    min_corner: Point
    width: float
    height: float

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError("rectangle extents must be nonnegative")

    @property
    def min_x(self) -> float:
        return self.min_corner.x

    @property
    def min_y(self) -> float:
        return self.min_corner.y

    @property
    def max_x(self) -> float:
        return self.min_corner.x + self.width

    @property
    def max_y(self) -> float:
        return self.min_corner.y + self.height

    # corner names follow the usual e(top-left) f(top-right) g(bottom-right) h(bottom-left)
    @property
    def e(self) -> Point:
        return Point(self.min_x, self.max_y)

    @property
    def f(self) -> Point:
        return Point(self.max_x, self.max_y)

    @property
    def g(self) -> Point:
        return Point(self.max_x, self.min_y)

    @property
    def h(self) -> Point:
        return Point(self.min_x, self.min_y)

    def contains(self, p: Point, tol: float = TOL) -> bool:
        return (self.min_x - tol <= p.x <= self.max_x + tol
                and self.min_y - tol <= p.y <= self.max_y + tol)

    @classmethod
    def spanning(cls, x0: float, x1: float, y0: float, y1: float) -> "Rect":
        lo_x, hi_x = min(x0, x1), max(x0, x1)
        lo_y, hi_y = min(y0, y1), max(y0, y1)
        return cls(Point(lo_x, lo_y), hi_x - lo_x, hi_y - lo_y)


@dataclass(frozen=True)
class Square:
    min_corner: Point
    side: float

    def __post_init__(self):
        if not self.side >= 0:
            raise ValueError("square side must be nonnegative")

    @property
    def min_x(self) -> float:
        return self.min_corner.x

    @property
    def min_y(self) -> float:
        return self.min_corner.y

    @property
    def max_x(self) -> float:
        return self.min_corner.x + self.side

    @property
    def max_y(self) -> float:
        return self.min_corner.y + self.side

    @property
    def center(self) -> Point:
        h = self.side / 2
        return Point(self.min_corner.x + h, self.min_corner.y + h)

    @classmethod
    def from_center(cls, c: Point, side: float) -> "Square":
        return cls(Point(c.x - side / 2, c.y - side / 2), side)

    @classmethod
    def from_top_right(cls, t: Point, side: float) -> "Square":
        return cls(Point(t.x - side, t.y - side), side)

    def covers(self, p: Point, tol: float = TOL) -> bool:
        return (self.min_x - tol <= p.x <= self.max_x + tol
                and self.min_y - tol <= p.y <= self.max_y + tol)

    def as_rect(self) -> Rect:
        return Rect(self.min_corner, self.side, self.side)


@dataclass(frozen=True)
class Polyline:
    """Vertex chain with x nondecreasing along the vertex order."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise ValueError("a polyline needs at least two vertices")
        xs = [p.x for p in self.vertices]
        if any(b < a - 1e-12 * max(1.0, abs(a)) for a, b in zip(xs, xs[1:])):
            raise ValueError("polyline must be x-monotone")

    def pieces(self) -> list[Segment]:
        return [Segment(p, q) for p, q in zip(self.vertices, self.vertices[1:])]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float


def linf_dist(p: Point, q: Point) -> float:
    return max(abs(p.x - q.x), abs(p.y - q.y))


def cross(ox: float, oy: float, ax: float, ay: float, bx: float, by: float) -> float:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def _segment_intersections(s: Segment, t: Segment, tol: float) -> list[float]:
    """Parameters along ``s`` of the intersection of two closed segments."""
    px, py = s.u.x, s.u.y
    rx, ry = s.v.x - px, s.v.y - py
    qx, qy = t.u.x, t.u.y
    sx, sy = t.v.x - qx, t.v.y - qy
    denom = rx * sy - ry * sx
    wx, wy = qx - px, qy - py
    rr = rx * rx + ry * ry
    ss = sx * sx + sy * sy
    scale = math.sqrt(rr * ss) if rr and ss else 0.0
    if abs(denom) > 1e-12 * scale:
        a = (wx * sy - wy * sx) / denom
        b = (wx * ry - wy * rx) / denom
        ea = tol / math.sqrt(rr)
        eb = tol / math.sqrt(ss)
        if -ea <= a <= 1 + ea and -eb <= b <= 1 + eb:
            return [min(1.0, max(0.0, a))]
        return []
    # parallel (or degenerate)
    if rr == 0.0:
        # s is a point
        return [0.0] if _point_segment_euclid(s.u, t) <= tol else []
    if abs(wx * ry - wy * rx) / math.sqrt(rr) > tol:
        return []
    # collinear: project t's endpoints on s
    t0 = (wx * rx + wy * ry) / rr
    t1 = ((qx + sx - px) * rx + (qy + sy - py) * ry) / rr
    lo, hi = max(0.0, min(t0, t1)), min(1.0, max(t0, t1))
    e = tol / math.sqrt(rr)
    if lo > hi + e:
        return []
    return [lo, hi] if hi - lo > e else [min(1.0, max(0.0, (lo + hi) / 2))]


def _point_segment_euclid(p: Point, s: Segment) -> float:
    dx, dy = s.v.x - s.u.x, s.v.y - s.u.y
    dd = dx * dx + dy * dy
    t = 0.0 if dd == 0 else min(1.0, max(0.0, ((p.x - s.u.x) * dx + (p.y - s.u.y) * dy) / dd))
    return math.hypot(p.x - (s.u.x + t * dx), p.y - (s.u.y + t * dy))


def segment_polyline_intersections(s: Segment, pl: Polyline, tol: float = TOL) -> list[Point]:
    """Intersection points of ``s`` with ``pl``, ordered along ``s``.

    Collinear overlaps contribute the two ends of the overlap.
    """
    ts: list[float] = []
    for piece in pl.pieces():
        ts.extend(_segment_intersections(s, piece, tol))
    ts.sort()
    out: list[Point] = []
    length = math.hypot(s.v.x - s.u.x, s.v.y - s.u.y)
    last = None
    for t in ts:
        if last is not None and (t - last) * length <= tol:
            continue
        out.append(s.at(t))
        last = t
    return out


def point_segment_linf(p: Point, s: Segment) -> float:
    """L-infinity distance from a point to a closed segment."""
    return float(linf_point_segment(np.array([p.x]), np.array([p.y]),
                                    np.array([s.as_tuple()]))[0, 0])


def linf_point_segment(zx: np.ndarray, zy: np.ndarray, segs: np.ndarray) -> np.ndarray:
    """Pairwise L-infinity distances, shape ``(len(zx), len(segs))``.

    The square of half-side r around z meets a segment iff z lies in the
    segment's bounding box grown by r and in the slab of half-width r
    (measured in L-infinity) around its supporting line, so the distance is
    the larger of the two.
    """
    zx = np.asarray(zx, dtype=float)[:, None]
    zy = np.asarray(zy, dtype=float)[:, None]
    x1, y1, x2, y2 = (segs[:, k][None, :] for k in range(4))
    lo_x, hi_x = np.minimum(x1, x2), np.maximum(x1, x2)
    lo_y, hi_y = np.minimum(y1, y2), np.maximum(y1, y2)
    box = np.maximum(np.maximum(lo_x - zx, zx - hi_x), np.maximum(lo_y - zy, zy - hi_y))
    box = np.maximum(box, 0.0)
    nx, ny = y2 - y1, x1 - x2
    norm1 = np.abs(nx) + np.abs(ny)
    safe = np.where(norm1 > 0, norm1, 1.0)
    line = np.abs(nx * (zx - x1) + ny * (zy - y1)) / safe
    line = np.where(norm1 > 0, line, 0.0)
    return np.maximum(box, line)


def square_hits_segment(sq: Square, s: Segment, tol: float = TOL) -> bool:
    return point_segment_linf(sq.center, s) <= sq.side / 2 + tol


def square_covers_segment(sq: Square, s: Segment, tol: float = TOL) -> bool:
    # convexity: both endpoints inside means the whole segment is
    return sq.covers(s.u, tol) and sq.covers(s.v, tol)


def clip_parameters(s: Segment, halfplanes: Iterable[tuple[float, float, float]],
                    tol: float = 0.0) -> tuple[float, float] | None:
    """Parameter interval of ``s`` inside ``a*x + b*y <= c`` for all half-planes."""
    t0, t1 = 0.0, 1.0
    dx, dy = s.v.x - s.u.x, s.v.y - s.u.y
    for a, b, c in halfplanes:
        den = a * dx + b * dy
        num = c + tol * math.hypot(a, b) - (a * s.u.x + b * s.u.y)
        if den == 0.0:
            if num < 0:
                return None
            continue
        t = num / den
        if den > 0:
            t1 = min(t1, t)
        else:
            t0 = max(t0, t)
        if t0 > t1:
            return None
    return t0, t1


def clip_segment_to_halfplane(s: Segment, a: float, b: float, c: float,
                              tol: float = 0.0) -> Segment | None:
    """Part of ``s`` satisfying ``a*x + b*y <= c``."""
    return clip_segment_to_convex_region(s, [(a, b, c)], tol)


def clip_segment_to_convex_region(s: Segment, region, tol: float = 0.0) -> Segment | None:
    """Part of ``s`` inside a convex region.

    ``region`` is either a list of ``(a, b, c)`` half-planes or a
    :class:`Square` / :class:`Rect`, or a counterclockwise vertex list.
    """
    hp = as_halfplanes(region)
    iv = clip_parameters(s, hp, tol)
    if iv is None:
        return None
    t0, t1 = iv
    if t0 == 0.0 and t1 == 1.0:
        return s
    return Segment(s.at(t0), s.at(t1))


def as_halfplanes(region) -> list[tuple[float, float, float]]:
    if isinstance(region, (Square, Rect)):
        r = region.as_rect() if isinstance(region, Square) else region
        return [(-1.0, 0.0, -r.min_x), (1.0, 0.0, r.max_x),
                (0.0, -1.0, -r.min_y), (0.0, 1.0, r.max_y)]
    region = list(region)
    if region and isinstance(region[0], Point):
        return polygon_halfplanes(region)
    return [tuple(map(float, h)) for h in region]


def polygon_halfplanes(vertices: Sequence[Point]) -> list[tuple[float, float, float]]:
    """Half-planes of a counterclockwise convex polygon."""
    out = []
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        if p == q:
            continue
        # interior on the left of p->q
        a, b = q.y - p.y, p.x - q.x
        out.append((a, b, a * p.x + b * p.y))
    return out


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Counterclockwise hull without collinear points (monotone chain)."""
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2].x, chain[-2].y, chain[-1].x,
                                            chain[-1].y, p.x, p.y) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def bounds(segs: np.ndarray) -> tuple[float, float, float, float]:
    xs = segs[:, [0, 2]]
    ys = segs[:, [1, 3]]
    return float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max())


def segments_array(segments) -> np.ndarray:
    """Coerce segments / tuples / arrays to a float ``(n, 4)`` array."""
    if isinstance(segments, np.ndarray):
        arr = np.asarray(segments, dtype=float).reshape(-1, 4)
    else:
        rows = [s.as_tuple() if isinstance(s, Segment) else tuple(s) for s in segments]
        arr = np.array(rows, dtype=float).reshape(-1, 4)
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coordinate")
    return arr


def as_segments(arr: np.ndarray) -> list[Segment]:
    return [Segment.of(*row) for row in np.asarray(arr, dtype=float).reshape(-1, 4)]
