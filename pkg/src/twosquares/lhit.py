"""Hitting segments with two congruent squares.

``solve_hit`` is exact: it reduces the problem to piercing L-infinity
neighbourhoods with two points (see :mod:`twosquares.piercing`).

The rest of the module is the reference-polyline construction: the locus of
the top-right corner of the first square while it keeps hitting the two
extreme segments ``la`` and ``ld``, the event point each segment induces on
it, and the greedy that charges every segment to the square needing less.
That greedy is kept as a fast heuristic (``greedy_hit``); it can overshoot
the optimum, which ``solve_hit`` never does.

Polylines live in local coordinates: ``h`` at the origin, transposed so the
stabbing rectangle is at least as wide as tall, and mirrored vertically for
the second configuration. The second polyline (bottom-left corner of the
second square) is the first one of the point-reflected instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .frame import HitFrame, LocalMap, build_hit_frame
from .geom import (TOL, Point, Polyline, Segment, Square, clip_parameters,
                   linf_point_segment, segment_polyline_intersections,
                   _segment_intersections)
from .lcover import SquarePairSolution
from .piercing import PiercingStats, streaming_piercing
from .source import BLOCK, as_source


def corner_distance(t: Point, seg: Segment) -> float:
    """Side of the smallest square with top-right corner ``t`` that hits ``seg``."""
    iv = clip_parameters(seg, [(1.0, 0.0, t.x), (0.0, 1.0, t.y)])
    if iv is None:
        return math.inf
    p, q = seg.at(iv[0]), seg.at(iv[1])
    cands = [p, q]
    # where the horizontal and vertical gaps agree
    gp, gq = (p.x - p.y) - (t.x - t.y), (q.x - q.y) - (t.x - t.y)
    if gp * gq < 0:
        s = gp / (gp - gq)
        cands.append(Point(p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)))
    return min(max(t.x - w.x, t.y - w.y) for w in cands)


def _flip(p: Point, fx: int, fy: int) -> Point:
    return Point(fx * p.x, fy * p.y)


def quadrant_distance(t: Point, seg: Segment, fx: int = 1, fy: int = 1) -> float:
    """Like :func:`corner_distance` with ``t`` as another corner.

    ``fx=-1`` makes ``t`` a left corner, ``fy=-1`` a bottom corner.
    """
    s = Segment(_flip(seg.u, fx, fy), _flip(seg.v, fx, fy))
    return corner_distance(_flip(t, fx, fy), s)


def _mirror(p: Point, c: Point) -> Point:
    return Point(2 * c.x - p.x, 2 * c.y - p.y)


@dataclass(frozen=True)
class ReferencePolyline:
    """Locus of a square corner, plus the two segments it must keep hitting.

    For ``side=1`` the vertices carry the top-right corner; for ``side=2``
    they carry the bottom-left corner and ``center`` is the point reflection
    that maps this polyline onto a side-1 one.
    """

    vertices: Polyline
    side: int
    case: str
    anchors: tuple[Segment, Segment]
    center: Point | None = None
    world: LocalMap | None = field(default=None, compare=False)

    def canonical(self) -> "ReferencePolyline":
        if self.side == 1:
            return self
        c = self.center
        vs = tuple(_mirror(p, c) for p in reversed(self.vertices.vertices))
        an = tuple(Segment(_mirror(s.u, c), _mirror(s.v, c)) for s in self.anchors)
        return ReferencePolyline(Polyline(vs), 1, self.case, an, None, self.world)

    @property
    def start(self) -> Point:
        """``p``: where the anchored square is smallest."""
        vs = self.vertices.vertices
        return vs[0] if self.side == 1 else vs[-1]


@dataclass(frozen=True)
class EventPoint:
    location: Point
    sigma: float
    index: int = -1


@dataclass(frozen=True)
class HalfLinePair:
    """Half-lines from ``apex``: down and left for side 1, up and right for side 2."""

    apex: Point
    side: int = 1

    def rays(self, reach: float) -> tuple[Segment, Segment]:
        """Finite stand-ins ``(vertical, horizontal)`` of length ``reach``."""
        k = -reach if self.side == 1 else reach
        p = self.apex
        return Segment(p, Point(p.x, p.y + k)), Segment(p, Point(p.x + k, p.y))


def _monotone(vs: list[Point]) -> list[Point]:
    out = [vs[0]]
    for v in vs[1:]:
        if v.x >= out[-1].x:
            out.append(v)
    return out


def _line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point | None:
    dx1, dy1 = p2.x - p1.x, p2.y - p1.y
    dx2, dy2 = q2.x - q1.x, q2.y - q1.y
    den = dx1 * dy2 - dy1 * dx2
    if abs(den) <= 1e-12 * (abs(dx1) + abs(dy1)) * (abs(dx2) + abs(dy2)):
        return None
    s = ((q1.x - p1.x) * dy2 - (q1.y - p1.y) * dx2) / den
    return Point(p1.x + s * dx1, p1.y + s * dy1)


def _head_ii(a: Point, la: Segment, d: Point, ld: Segment) -> tuple[list[Point], str]:
    alpha, delta = a.y, d.x
    if alpha < delta:
        s = quadrant_distance(a, ld, fx=-1)
        if math.isinf(s):
            s = delta - a.x
        return [Point(a.x + s, a.y), Point(delta, delta)], "|ha|<|hd|"
    return [Point(alpha, alpha)], "|ha|>=|hd|"


def _head_iv(a: Point, la: Segment, d: Point, ld: Segment) -> tuple[list[Point], str]:
    alpha, delta = a.y, d.x
    a2, d2 = la.other(a), ld.other(d)
    x = _line_intersection(a, a2, d, d2) if a != a2 and d != d2 else None
    if x is None or x.x >= 0:
        if alpha < delta:
            head, branch = _head_ii(a, la, d, ld)
            return head, "A:" + branch
        if alpha > delta:
            s = quadrant_distance(d, la, fy=-1)
            if math.isinf(s):
                s = alpha - d.y
            return [Point(d.x, d.y + s), Point(alpha, alpha)], "A:|ha|>|hd|"
        return [Point(alpha, alpha)], "A:|ha|=|hd|"
    ua = Point(a.x - x.x, a.y - x.y)
    ud = Point(d.x - x.x, d.y - x.y)
    # s*(-ua) + t*ud = (1, -1): top-left on la's line, bottom-right on ld's line
    det = -ua.x * ud.y + ud.x * ua.y
    if det == 0:
        head, branch = _head_ii(a, la, d, ld)
        return head, "A:" + branch
    s1 = (1 * ud.y - ud.x * -1) / det
    t1 = (-ua.x * -1 - (-ua.y) * 1) / det
    if s1 <= 0 or t1 <= 0:
        head, branch = _head_ii(a, la, d, ld)
        return head, "A:" + branch

    def theta(sig: float) -> Point:
        return Point(x.x + sig * t1 * ud.x, x.y + sig * s1 * ua.y)

    def param(p: Point, u: Point) -> float:
        return ((p.x - x.x) * u.x + (p.y - x.y) * u.y) / (u.x * u.x + u.y * u.y)

    lo = max(0.0, min(param(a2, ua), 1.0) / s1, min(param(d2, ud), 1.0) / t1)
    if alpha < delta:
        sq = 1.0 / s1
        r, branch = Point(delta, delta), "B:|ha|<|hd|"
    else:
        sq = 1.0 / t1
        r, branch = Point(alpha, alpha), "B:|ha|>=|hd|"
    lo = min(lo, sq)
    return [theta(lo), theta(sq), r], branch


def reference_head(la: Segment, a: Point, ld: Segment, d: Point) -> tuple[list[Point], str]:
    """Breakpoints of the first polyline before it joins the diagonal for good."""
    a2, d2 = la.other(a), ld.other(d)
    up_a = a2.y >= a.y
    if up_a and d.x < d2.x:
        m = max(a.y, d.x)
        return [Point(m, m)], "i:" + ("|ha|<|hd|" if a.y < d.x else "|ha|>=|hd|")
    if up_a:
        head, branch = _head_ii(a, la, d, ld)
        return head, "ii:" + branch
    if d.x <= d2.x:
        sw = lambda s: s.swapped()
        head, branch = _head_ii(d.swapped(), sw(ld), a.swapped(), sw(la))
        return [v.swapped() for v in head], "iii:" + branch
    head, branch = _head_iv(a, la, d, ld)
    return head, "iv-" + branch


def reference_polyline(la: Segment, a: Point, ld: Segment, d: Point, L: float) -> ReferencePolyline:
    """First reference polyline from local anchors (``h`` at the origin)."""
    head, case = reference_head(la, a, ld, d)
    end = max(L, head[-1].x, head[-1].y)
    vs = _monotone(head + [Point(end, end)])
    if len(vs) == 1:
        vs = vs * 2
    return ReferencePolyline(Polyline(tuple(vs)), 1, case, (la, ld))


def local_map(frame: HitFrame, config: int = 1) -> LocalMap:
    h = frame.rect.h
    if frame.transposed:
        m = LocalMap(h.y, h.x, True, False, frame.rect.width)
    else:
        m = LocalMap(h.x, h.y, False, False, frame.rect.height)
    return m.reflected_copy() if config == 2 else m


def local_anchors(frame: HitFrame, config: int = 1):
    """``(la, a, lb, b, lc, c, ld, d)`` as seen in the local frame.

    Transposition and reflection relabel which extreme plays which role.
    """
    m = local_map(frame, config)
    roles = {"a": (frame.la, frame.a), "b": (frame.lb, frame.b),
             "c": (frame.lc, frame.c), "d": (frame.ld, frame.d)}
    if frame.transposed:
        roles = {"a": roles["d"], "b": roles["c"], "c": roles["b"], "d": roles["a"]}
    if config == 2:
        roles = {"a": roles["a"], "b": roles["d"], "c": roles["c"], "d": roles["b"]}
    out = []
    for k in "abcd":
        seg, pt = roles[k]
        out += [m.segment_to_local(seg), m.point_to_local(pt)]
    return tuple(out), m


def build_reference_polyline(frame: HitFrame, side: int = 1, config: int = 1) -> ReferencePolyline:
    (la, a, lb, b, lc, c, ld, d), m = local_anchors(frame, config)
    L = frame.L if not frame.transposed else frame.W
    W = frame.W if not frame.transposed else frame.L
    if side == 1:
        rp = reference_polyline(la, a, ld, d, L)
        return ReferencePolyline(rp.vertices, 1, rp.case, rp.anchors, None, m)
    center = Point(L / 2, W / 2)
    refl = lambda s: Segment(_mirror(s.u, center), _mirror(s.v, center))
    rp = reference_polyline(refl(lc), _mirror(c, center), refl(lb), _mirror(b, center), L)
    vs = tuple(_mirror(p, center) for p in reversed(rp.vertices.vertices))
    return ReferencePolyline(Polyline(vs), 2, rp.case, (lb, lc), center, m)


def _gamma(rp: ReferencePolyline, reach: float) -> Polyline:
    """The polyline continued along the diagonal out to ``reach``."""
    vs = list(rp.vertices.vertices)
    last = vs[-1]
    if reach > 0:
        vs.append(Point(last.x + reach, last.y + reach))
    return Polyline(tuple(vs))


def _on_gamma_at_x(rp: ReferencePolyline, x: float) -> Point:
    vs = rp.vertices.vertices
    if x <= vs[0].x:
        return vs[0]
    for p, q in zip(vs, vs[1:]):
        if x <= q.x:
            if q.x == p.x:
                return p
            s = (x - p.x) / (q.x - p.x)
            return Point(x, p.y + s * (q.y - p.y))
    last = vs[-1]
    return Point(x, last.y + (x - last.x))


def _on_gamma_at_y(rp: ReferencePolyline, y: float) -> Point:
    vs = rp.vertices.vertices
    if y <= vs[0].y:
        return vs[0]
    for p, q in zip(vs, vs[1:]):
        if min(p.y, q.y) <= y <= max(p.y, q.y) and q.y != p.y:
            s = (y - p.y) / (q.y - p.y)
            return Point(p.x + s * (q.x - p.x), y)
    last = vs[-1]
    return Point(last.x + (y - last.y), y)


def _gamma_y(rp: ReferencePolyline, x: float) -> float:
    vs = rp.vertices.vertices
    if x <= vs[0].x:
        return vs[0].y
    return _on_gamma_at_x(rp, x).y


def _reach(rp: ReferencePolyline, seg: Segment) -> float:
    coords = [abs(c) for p in (*rp.vertices.vertices, seg.u, seg.v) for c in p]
    return 4.0 * max(coords) + 1.0


def size_at(t: Point, rp: ReferencePolyline, tol: float = 1e-6) -> float:
    """Smallest square with the polyline's corner at ``t`` hitting both anchors."""
    can = rp.canonical()
    if rp.side == 2:
        t = _mirror(t, rp.center)
    g = _gamma(can, _reach(can, Segment(t, t)))
    near = min(linf_point_segment(np.array([t.x]), np.array([t.y]),
                                  np.array([s.as_tuple() for s in g.pieces()]))[0])
    if near > tol * max(1.0, abs(t.x), abs(t.y)):
        raise ValueError(f"point {t} is not on the reference polyline")
    return _size(can, t)


def _size(can: ReferencePolyline, t: Point) -> float:
    return max(corner_distance(t, s) for s in can.anchors)


def _meets(seg: Segment, other: Segment) -> bool:
    return bool(_segment_intersections(seg, other, TOL))


def hit_event_point(seg: Segment, rp: ReferencePolyline,
                    half_lines: HalfLinePair | None = None, index: int = -1) -> EventPoint | None:
    """Event of ``seg`` on ``rp``; ``None`` when the anchor pair already hits it."""
    if rp.side == 2:
        c = rp.center
        ev = hit_event_point(Segment(_mirror(seg.u, c), _mirror(seg.v, c)), rp.canonical(),
                             None, index)
        return None if ev is None else EventPoint(_mirror(ev.location, c), ev.sigma, index)
    half_lines = half_lines or HalfLinePair(rp.vertices.vertices[0])
    p = half_lines.apex
    reach = _reach(rp, seg)
    lv, lh = half_lines.rays(reach)
    if (_meets(seg, lv) or _meets(seg, lh)
            or (max(seg.u.x, seg.v.x) <= p.x and max(seg.u.y, seg.v.y) <= p.y)):
        return None
    g = _gamma(rp, reach)
    cuts = segment_polyline_intersections(seg, g)
    bp = seg.bp
    if not cuts:
        mid = seg.at(0.5)
        if mid.y > _gamma_y(rp, mid.x):
            loc = _on_gamma_at_y(rp, bp.y)
        else:
            loc = _on_gamma_at_x(rp, seg.lp.x)
    else:
        p1 = min(cuts, key=lambda c: (c.x, c.y))
        if bp.x >= p1.x:
            loc = p1
        elif bp.y < _gamma_y(rp, bp.x):
            loc = _on_gamma_at_x(rp, bp.x)
        else:
            loc = _on_gamma_at_y(rp, bp.y)
    return EventPoint(loc, _size(rp, loc), index)


def greedy_configuration(segs: list[Segment], d1: ReferencePolyline, d2: ReferencePolyline):
    """Greedy charge of each segment to the cheaper square.

    Returns ``(sigma1, sigma2, corner1, corner2)``.
    """
    c1, c2 = d1.start, d2.start
    best1, best2 = _size(d1.canonical(), d1.canonical().start), \
        _size(d2.canonical(), d2.canonical().start)
    for i, s in enumerate(segs):
        e1 = hit_event_point(s, d1, index=i)
        e2 = hit_event_point(s, d2, index=i)
        v1 = 0.0 if e1 is None else e1.sigma
        v2 = 0.0 if e2 is None else e2.sigma
        if v1 <= v2:
            if v1 > best1:
                best1, c1 = v1, e1.location
        elif v2 > best2:
            best2, c2 = v2, e2.location
    return best1, best2, c1, c2


def greedy_hit(source, tol: float = TOL) -> SquarePairSolution:
    """The reference-polyline greedy. A heuristic: it may exceed the optimum."""
    source = as_source(source)
    frame = build_hit_frame(source)
    results = []
    for config in (1, 2):
        d1 = build_reference_polyline(frame, 1, config)
        d2 = build_reference_polyline(frame, 2, config)
        segs = [d1.world.segment_to_local(Segment.of(*row))
                for rows in source.blocks() for row in rows]
        b1, b2, c1, c2 = greedy_configuration(segs, d1, d2)
        sigma = max(b1, b2)
        if math.isfinite(sigma):
            # squares with a fixed corner are nested, so growing keeps every hit
            results.append((sigma, config, Square.from_top_right(c1, sigma),
                            Square(c2, sigma), d1, d2))
    if not results:
        # the polylines never reach both anchors: fall back to the bounding square
        xs = [c for rows in source.blocks() for c in rows[:, [0, 2]].ravel()]
        ys = [c for rows in source.blocks() for c in rows[:, [1, 3]].ravel()]
        side = max(max(xs) - min(xs), max(ys) - min(ys))
        sq = Square(Point(min(xs), min(ys)), side)
        return SquarePairSolution("hit", side, sq, sq, 1, frame.n, frame.rect)
    sigma, config, s1, s2, d1, d2 = min(results, key=lambda r: (r[0], r[1]))
    m = d1.world
    guides = tuple(tuple(m.point_to_world(p) for p in d.vertices.vertices) for d in (d1, d2))
    return SquarePairSolution("hit", sigma, m.square_to_world(s1), m.square_to_world(s2),
                              config, frame.n, frame.rect, guides)


def solve_hit(source, tol: float = TOL, block: int = BLOCK,
              stats: PiercingStats | None = None) -> SquarePairSolution:
    """Optimal common side of two squares hitting every segment."""
    source = as_source(source)
    frame = build_hit_frame(source)
    seed = np.array([s.as_tuple() for s in frame.anchors])
    r = frame.rect
    scale = max(r.width, r.height, 1.0)
    sol = streaming_piercing(source, seed, scale, batch=1, block=block, stats=stats)
    sigma = 2.0 * sol.radius
    q1 = Square.from_center(Point(*sol.z1), sigma)
    q2 = Square.from_center(Point(*sol.z2), sigma)
    s1, s2 = (q1, q2) if (q1.min_x, q1.min_y) <= (q2.min_x, q2.min_y) else (q2, q1)
    config = 1 if s1.min_y <= s2.min_y else 2
    return SquarePairSolution("hit", sigma, s1, s2, config, frame.n, frame.rect)
