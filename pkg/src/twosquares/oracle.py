"""Brute-force reference solvers for small instances.

These share no code with the solvers beyond the basic predicates, and are
meant for ``n`` up to about a dozen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .geom import (TOL, Point, Segment, clip_parameters, convex_hull, cross,
                   segments_array, as_segments)


@dataclass(frozen=True)
class ConvexRegion:
    """Convex polygon, counterclockwise; may be degenerate (segment or point)."""

    vertices: tuple[Point, ...]

    def halfplanes(self) -> list[tuple[float, float, float]]:
        vs = self.vertices
        xs = [p.x for p in vs]
        ys = [p.y for p in vs]
        # the bounding box closes degenerate hulls
        out = [(-1.0, 0.0, -min(xs)), (1.0, 0.0, max(xs)),
               (0.0, -1.0, -min(ys)), (0.0, 1.0, max(ys))]
        if len(vs) >= 2:
            for i in range(len(vs)):
                p, q = vs[i], vs[(i + 1) % len(vs)]
                if p == q:
                    continue
                a, b = q.y - p.y, p.x - q.x
                out.append((a, b, a * p.x + b * p.y))
            if len(vs) == 2:
                p, q = vs
                a, b = p.y - q.y, q.x - p.x
                out.append((a, b, a * p.x + b * p.y))
        return out

    def is_convex(self) -> bool:
        vs = self.vertices
        if len(vs) < 3:
            return True
        n = len(vs)
        return all(cross(vs[i].x, vs[i].y, vs[(i + 1) % n].x, vs[(i + 1) % n].y,
                         vs[(i + 2) % n].x, vs[(i + 2) % n].y) > 0 for i in range(n))


def placement_region(seg: Segment, sigma: float) -> ConvexRegion:
    """Bottom-left corners of the ``sigma``-squares that hit ``seg``."""
    pts = [Point(p.x - dx, p.y - dy) for p in (seg.u, seg.v)
           for dx, dy in ((0, 0), (sigma, 0), (0, sigma), (sigma, sigma))]
    return ConvexRegion(tuple(convex_hull(pts)))


def _clip_polygon(poly: list[tuple[float, float]], a: float, b: float, c: float,
                  tol: float) -> list[tuple[float, float]]:
    """Sutherland-Hodgman step against ``a*x + b*y <= c`` (loosened by ``tol``)."""
    c = c + tol * math.hypot(a, b)
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def regions_intersect(regions: Sequence[ConvexRegion], tol: float) -> bool:
    """Iterated convex intersection, starting from the common bounding box."""
    planes = [hp for r in regions for hp in r.halfplanes()]
    lo_x = max(-c for a, b, c in planes if (a, b) == (-1.0, 0.0))
    hi_x = min(c for a, b, c in planes if (a, b) == (1.0, 0.0))
    lo_y = max(-c for a, b, c in planes if (a, b) == (0.0, -1.0))
    hi_y = min(c for a, b, c in planes if (a, b) == (0.0, 1.0))
    if lo_x > hi_x + tol or lo_y > hi_y + tol:
        return False
    lo_x, hi_x = min(lo_x, hi_x) - tol, max(lo_x, hi_x) + tol
    lo_y, hi_y = min(lo_y, hi_y) - tol, max(lo_y, hi_y) + tol
    poly = [(lo_x, lo_y), (hi_x, lo_y), (hi_x, hi_y), (lo_x, hi_y)]
    for a, b, c in planes:
        poly = _clip_polygon(poly, a, b, c, tol)
        if not poly:
            return False
    return True


def _bisect(feasible: Callable[[float], bool], lo: float, hi: float, tol: float,
            iterations: int = 200) -> float:
    if feasible(lo):
        return lo
    for _ in range(iterations):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _scale(segs: Sequence[Segment]) -> float:
    xs = [c for s in segs for c in (s.u.x, s.v.x)]
    ys = [c for s in segs for c in (s.u.y, s.v.y)]
    return max(max(xs) - min(xs), max(ys) - min(ys))


def _bbox(segs: Sequence[Segment]):
    xs = [c for s in segs for c in (s.u.x, s.v.x)]
    ys = [c for s in segs for c in (s.u.y, s.v.y)]
    return min(xs), min(ys), max(xs), max(ys)


def _inside(p: Point, x0, y0, x1, y1, tol) -> bool:
    return x0 - tol <= p.x <= x1 + tol and y0 - tol <= p.y <= y1 + tol


def _cover_feasible(segs, near, far, tol) -> bool:
    x0, y0, x1, y1 = near
    planes = [(-1.0, 0.0, -x0), (1.0, 0.0, x1), (0.0, -1.0, -y0), (0.0, 1.0, y1)]
    for s in segs:
        iv = clip_parameters(s, planes, tol)
        rest = []
        if iv is None:
            rest = [s.u, s.v]
        else:
            t0, t1 = iv
            if t0 > 0:
                rest += [s.u, s.at(t0)]
            if t1 < 1:
                rest += [s.at(t1), s.v]
        if not all(_inside(p, *far, tol) for p in rest):
            return False
    return True


def oracle_cover(segments, tol: float = TOL) -> float:
    """Binary search on the side of squares anchored at opposite corners."""
    segs = as_segments(segments_array(segments))
    hx, hy, fx, fy = _bbox(segs)
    scale = max(fx - hx, fy - hy)
    best = math.inf
    for config in (1, 2):
        def feasible(s, config=config):
            if config == 1:
                near = (hx, hy, hx + s, hy + s)
                far = (fx - s, fy - s, fx, fy)
            else:
                near = (hx, fy - s, hx + s, fy)
                far = (fx - s, hy, fx, hy + s)
            return _cover_feasible(segs, near, far, tol)
        best = min(best, _bisect(feasible, 0.0, scale, 1e-9 * max(1.0, scale)))
    return best


def min_cover_square(segments, tol: float = TOL, upper: float | None = None) -> float:
    segs = as_segments(segments_array(segments))
    if not segs:
        return 0.0
    x0, y0, x1, y1 = _bbox(segs)
    return max(x1 - x0, y1 - y0)


def min_hit_square(segments, tol: float = TOL, upper: float | None = None) -> float:
    """Smallest square hitting every segment.

    With ``upper`` given, returns ``upper`` as soon as that size is known to
    be infeasible (callers use it to prune).
    """
    segs = as_segments(segments_array(segments))
    if len(segs) <= 1:
        return 0.0
    lb = max(max(s.lp.x for s in segs) - min(s.rp.x for s in segs),
             max(s.bp.y for s in segs) - min(s.tp.y for s in segs), 0.0)
    hi = _scale(segs)

    def feasible(sigma):
        return regions_intersect([placement_region(s, sigma) for s in segs], tol)

    if upper is not None and upper < hi:
        if not feasible(upper):
            return upper
        hi = upper
    if lb >= hi:
        return hi
    return _bisect(feasible, lb, hi, 1e-10 * max(1.0, hi))


def oracle_partition(segments, kernel: Callable = min_cover_square, tol: float = TOL) -> float:
    """Minimum over all two-part splits of the larger part's kernel value."""
    segs = as_segments(segments_array(segments))
    n = len(segs)
    if n == 0:
        return 0.0
    full = (1 << n) - 1
    cache: dict[int, tuple[float, bool]] = {0: (0.0, True)}

    def value(mask: int, cap: float) -> tuple[float, bool]:
        hit = cache.get(mask)
        if hit is not None and (hit[1] or hit[0] >= cap):
            return hit
        sub = [segs[i] for i in range(n) if mask >> i & 1]
        cap_arg = None if math.isinf(cap) else cap
        v = kernel(sub, tol, upper=cap_arg)
        exact = cap_arg is None or v < cap
        cache[mask] = (v, exact)
        return v, exact

    best = math.inf
    # element 0 always sits in part A
    for rest in range(1 << (n - 1)):
        a = 1 | (rest << 1)
        b = full ^ a
        va, _ = value(a, best)
        if va >= best:
            continue
        vb, _ = value(b, best)
        best = min(best, max(va, vb))
    return best


def smallest_enclosing_disk(points: Sequence[Point]) -> tuple[Point, float]:
    """Exhaustive over diametral pairs and circumcircles of triples."""
    pts = list(dict.fromkeys(points))
    if len(pts) == 1:
        return pts[0], 0.0
    eps = 1e-9

    def covers(c, r):
        return all(math.hypot(p.x - c.x, p.y - c.y) <= r * (1 + eps) + eps for p in pts)

    best = (pts[0], math.inf)
    for p, q in combinations(pts, 2):
        c = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        r = math.hypot(p.x - q.x, p.y - q.y) / 2
        if r < best[1] and covers(c, r):
            best = (c, r)
    for p, q, s in combinations(pts, 3):
        d = 2 * (p.x * (q.y - s.y) + q.x * (s.y - p.y) + s.x * (p.y - q.y))
        if d == 0:
            continue
        pp, qq, ss = p.x ** 2 + p.y ** 2, q.x ** 2 + q.y ** 2, s.x ** 2 + s.y ** 2
        c = Point((pp * (q.y - s.y) + qq * (s.y - p.y) + ss * (p.y - q.y)) / d,
                  (pp * (s.x - q.x) + qq * (p.x - s.x) + ss * (q.x - p.x)) / d)
        r = math.hypot(p.x - c.x, p.y - c.y)
        if r < best[1] and covers(c, r):
            best = (c, r)
    return best


def oracle_two_disk_cover(segments, tol: float = TOL) -> float:
    """Optimal common radius of two disks covering the segments.

    A disk covers a segment iff it holds both endpoints, so each part's
    optimum is the smallest disk around its endpoints.
    """
    segs = as_segments(segments_array(segments))
    n = len(segs)

    @lru_cache(maxsize=None)
    def radius(mask: int) -> float:
        pts = [p for i in range(n) if mask >> i & 1 for p in (segs[i].u, segs[i].v)]
        return smallest_enclosing_disk(pts)[1] if pts else 0.0

    full = (1 << n) - 1
    return min(max(radius(1 | (rest << 1)), radius(full ^ (1 | (rest << 1))))
               for rest in range(1 << (n - 1)))
