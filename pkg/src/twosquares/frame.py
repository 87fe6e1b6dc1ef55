"""First-pass extremes, the enclosing/stabbing rectangle and frame transforms."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .geom import Point, Rect, Segment, Square
from .source import InstanceError, SegmentSource, as_source


@dataclass(frozen=True)
class LocalMap:
    """World <-> local coordinates.

    Local coordinates put ``h`` at the origin, optionally after an x/y swap
    (so that the frame is at least as wide as tall) and optionally after a
    vertical reflection ``y -> height - y``.
    """

    ox: float
    oy: float
    transposed: bool = False
    reflected: bool = False
    height: float = 0.0

    def to_local(self, arr: np.ndarray) -> np.ndarray:
        a = np.asarray(arr, dtype=float)
        if self.transposed:
            a = a[:, [1, 0, 3, 2]]
        a = a - np.array([self.ox, self.oy, self.ox, self.oy])
        if self.reflected:
            a = a.copy()
            a[:, [1, 3]] = self.height - a[:, [1, 3]]
        return a

    def point_to_local(self, p: Point) -> Point:
        x, y = (p.y, p.x) if self.transposed else (p.x, p.y)
        x, y = x - self.ox, y - self.oy
        if self.reflected:
            y = self.height - y
        return Point(x, y)

    def point_to_world(self, p: Point) -> Point:
        x, y = p.x, p.y
        if self.reflected:
            y = self.height - y
        x, y = x + self.ox, y + self.oy
        return Point(y, x) if self.transposed else Point(x, y)

    def segment_to_local(self, s: Segment) -> Segment:
        return Segment(self.point_to_local(s.u), self.point_to_local(s.v))

    def segment_to_world(self, s: Segment) -> Segment:
        return Segment(self.point_to_world(s.u), self.point_to_world(s.v))

    def square_to_world(self, sq: Square) -> Square:
        a = self.point_to_world(sq.min_corner)
        b = self.point_to_world(Point(sq.max_x, sq.max_y))
        return Square(Point(min(a.x, b.x), min(a.y, b.y)), sq.side)

    def square_to_local(self, sq: Square) -> Square:
        a = self.point_to_local(sq.min_corner)
        b = self.point_to_local(Point(sq.max_x, sq.max_y))
        return Square(Point(min(a.x, b.x), min(a.y, b.y)), sq.side)

    def reflected_copy(self) -> "LocalMap":
        return replace(self, reflected=not self.reflected)


@dataclass(frozen=True)
class CoverFrame:
    a: Point
    b: Point
    c: Point
    d: Point
    rect: Rect
    L: float
    W: float
    transposed: bool
    n: int

    @property
    def local(self) -> LocalMap:
        """Map into the normalized frame with ``h`` at the origin."""
        h = self.rect.h
        if self.transposed:
            return LocalMap(h.y, h.x, True, False, self.W)
        return LocalMap(h.x, h.y, False, False, self.W)

    @property
    def scale(self) -> float:
        return max(1.0, self.L)


def _take_extreme(best, vals: np.ndarray, pts: np.ndarray, maximize: bool, offset: int):
    idx = int(np.argmax(vals) if maximize else np.argmin(vals))
    v = float(vals[idx])
    if best is None or (v > best[0] if maximize else v < best[0]):
        return (v, Point(float(pts[idx, 0]), float(pts[idx, 1])), offset + idx)
    return best


def build_cover_frame(source) -> CoverFrame:
    """One sequential pass over all ``2n`` endpoints."""
    source = as_source(source)
    lo_x = hi_x = lo_y = hi_y = None
    n = 0
    for block in source.blocks():
        # endpoints in input order: u of row 0, v of row 0, u of row 1, ...
        pts = block.reshape(-1, 2)
        lo_x = _take_extreme(lo_x, pts[:, 0], pts, False, 2 * n)
        hi_x = _take_extreme(hi_x, pts[:, 0], pts, True, 2 * n)
        lo_y = _take_extreme(lo_y, pts[:, 1], pts, False, 2 * n)
        hi_y = _take_extreme(hi_y, pts[:, 1], pts, True, 2 * n)
        n += len(block)
    if n == 0:
        raise InstanceError("empty instance")
    a, b, c, d = lo_x[1], hi_y[1], hi_x[1], lo_y[1]
    rect = Rect.spanning(a.x, c.x, d.y, b.y)
    transposed = rect.height > rect.width
    L, W = (rect.height, rect.width) if transposed else (rect.width, rect.height)
    return CoverFrame(a, b, c, d, rect, L, W, transposed, n)


@dataclass(frozen=True)
class HitFrame:
    """Extreme segments for hitting.

    ``a`` is the right endpoint of the segment whose right endpoint is
    leftmost, ``b`` the bottom endpoint of the segment whose bottom endpoint
    is highest, ``c`` and ``d`` symmetric. ``a2..d2`` are the other endpoints.
    The frame itself is never transposed; ``transposed`` records whether the
    solver should transpose because the stabbing rectangle is taller than wide.
    """

    la: Segment
    lb: Segment
    lc: Segment
    ld: Segment
    a: Point
    b: Point
    c: Point
    d: Point
    rect: Rect
    L: float
    W: float
    transposed: bool
    n: int
    indices: tuple[int, int, int, int]

    @property
    def a2(self) -> Point:
        return self.la.other(self.a)

    @property
    def b2(self) -> Point:
        return self.lb.other(self.b)

    @property
    def c2(self) -> Point:
        return self.lc.other(self.c)

    @property
    def d2(self) -> Point:
        return self.ld.other(self.d)

    @property
    def anchors(self) -> list[Segment]:
        return [self.la, self.lb, self.lc, self.ld]


def _pick(row: np.ndarray, coord: int, value: float, prefer_low: int) -> Point:
    """Endpoint of ``row`` whose ``coord`` equals ``value``.

    Ties (axis-parallel rows) go to the endpoint that is smaller
    (``prefer_low=1``) or larger (``-1``) in the other coordinate.
    """
    u = Point(float(row[0]), float(row[1]))
    v = Point(float(row[2]), float(row[3]))
    cu, cv = (u.x, v.x) if coord == 0 else (u.y, v.y)
    if cu == value and cv != value:
        return u
    if cv == value and cu != value:
        return v
    ou, ov = (u.y, v.y) if coord == 0 else (u.x, v.x)
    return u if (ou <= ov) == (prefer_low > 0) else v


def build_hit_frame(source) -> HitFrame:
    source = as_source(source)
    best = [None, None, None, None]  # (value, row, index)
    n = 0
    for block in source.blocks():
        xs = block[:, [0, 2]]
        ys = block[:, [1, 3]]
        keys = (xs.max(axis=1), ys.min(axis=1), xs.min(axis=1), ys.max(axis=1))
        for k, (vals, maximize) in enumerate(zip(keys, (False, True, True, False))):
            i = int(np.argmax(vals) if maximize else np.argmin(vals))
            v = float(vals[i])
            cur = best[k]
            if cur is None or (v > cur[0] if maximize else v < cur[0]):
                best[k] = (v, block[i].copy(), n + i)
        n += len(block)
    if n == 0:
        raise InstanceError("empty instance")
    (va, ra, ia), (vb, rb, ib), (vc, rc, ic), (vd, rd, id_) = best
    a = _pick(ra, 0, va, 1)
    b = _pick(rb, 1, vb, -1)
    c = _pick(rc, 0, vc, -1)
    d = _pick(rd, 1, vd, 1)
    rect = Rect.spanning(va, vc, vb, vd)
    return HitFrame(
        Segment.of(*ra), Segment.of(*rb), Segment.of(*rc), Segment.of(*rd),
        a, b, c, d, rect, rect.width, rect.height, rect.height > rect.width, n,
        (ia, ib, ic, id_),
    )


def hit_frame_of(segments) -> HitFrame:
    return build_hit_frame(as_source(segments))


def reflect_vertical(obj, y_min: float | None = None, y_max: float | None = None):
    """Mirror ``y -> (y_min + y_max) - y``.

    Accepts a segment array, a list of segments, a frame or a square. Without
    explicit bounds, an instance is mirrored about its own bounding box and a
    frame about its rectangle, so applying it twice is the identity.
    """
    if isinstance(obj, CoverFrame):
        r = obj.rect
        s = r.min_y + r.max_y
        f = lambda p: Point(p.x, s - p.y)
        return replace(obj, a=f(obj.a), b=f(obj.d), c=f(obj.c), d=f(obj.b))
    if isinstance(obj, HitFrame):
        r = obj.rect
        s = r.min_y + r.max_y
        f = lambda p: Point(p.x, s - p.y)
        g = lambda seg: Segment(f(seg.u), f(seg.v))
        ia, ib, ic, id_ = obj.indices
        return replace(obj, la=g(obj.la), lb=g(obj.ld), lc=g(obj.lc), ld=g(obj.lb),
                       a=f(obj.a), b=f(obj.d), c=f(obj.c), d=f(obj.b),
                       indices=(ia, id_, ic, ib))
    if isinstance(obj, Square):
        if y_min is None or y_max is None:
            raise ValueError("reflecting a square needs explicit bounds")
        return Square(Point(obj.min_x, y_min + y_max - obj.max_y), obj.side)
    if isinstance(obj, np.ndarray):
        arr = np.asarray(obj, dtype=float).reshape(-1, 4)
        if y_min is None or y_max is None:
            ys = arr[:, [1, 3]]
            y_min, y_max = float(ys.min()), float(ys.max())
        out = arr.copy()
        out[:, [1, 3]] = (y_min + y_max) - arr[:, [1, 3]]
        return out
    segs = list(obj)
    arr = reflect_vertical(np.array([s.as_tuple() for s in segs], dtype=float).reshape(-1, 4),
                           y_min, y_max)
    return [Segment.of(*row) for row in arr]


def transpose(obj):
    """Swap x and y of a segment array or list."""
    if isinstance(obj, np.ndarray):
        return np.asarray(obj, dtype=float).reshape(-1, 4)[:, [1, 0, 3, 2]].copy()
    return [s.swapped() for s in obj]
