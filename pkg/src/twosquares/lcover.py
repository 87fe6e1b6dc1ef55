"""Two-pass covering of segments by two congruent anchored squares.

Pass 1 finds the bounding rectangle. Pass 2 streams the segments once more
and, for both corner pairings at the same time, keeps the largest distance
any segment forces on its anchored square. Extra memory is one block.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .frame import CoverFrame, LocalMap, build_cover_frame
from .geom import (TOL, Point, Polyline, Rect, Segment, Square, linf_dist,
                   segment_polyline_intersections)
from .source import BLOCK, as_source


@dataclass(frozen=True)
class PartitionPolyline:
    vertices: Polyline
    near_anchor: Point
    far_anchor: Point


@dataclass(frozen=True)
class SquarePairSolution:
    problem: str
    sigma: float
    s1: Square
    s2: Square
    config: int
    n: int
    rect: Rect
    guides: tuple[tuple[Point, ...], ...] = field(default=(), compare=False)

    @property
    def squares(self) -> tuple[Square, Square]:
        return (self.s1, self.s2)


def build_partition_polylines(frame: CoverFrame) -> tuple[PartitionPolyline, PartitionPolyline]:
    """The two L-infinity bisectors of opposite corners of the frame.

    Coordinates are in the normalized frame (transposed when the frame was
    taller than wide) with the true position of ``h`` added back. Vertices
    are listed left to right.
    """
    L, W = frame.L, frame.W
    lm = frame.local
    ox, oy = lm.ox, lm.oy
    if W > L / 2:
        l1 = [(L - W, W), (L / 2, L / 2), (L / 2, W - L / 2), (W, 0.0)]
        l2 = [(L - W, 0.0), (L / 2, W - L / 2), (L / 2, L / 2), (W, W)]
    else:
        l1 = l2 = [(L / 2, 0.0), (L / 2, W)]
    shift = lambda pts: Polyline(tuple(Point(x + ox, y + oy) for x, y in pts))
    h, e = Point(ox, oy), Point(ox, oy + W)
    f, g = Point(ox + L, oy + W), Point(ox + L, oy)
    return PartitionPolyline(shift(l1), h, f), PartitionPolyline(shift(l2), e, g)


def config_delta(seg: Segment, lam: PartitionPolyline, near: Point | None = None,
                 far: Point | None = None, tol: float = TOL) -> float:
    """Side of the anchored squares forced by one segment.

    The segment is cut at every crossing with the bisector; each piece is
    charged to the anchor on its side of the bisector.
    """
    near = lam.near_anchor if near is None else near
    far = lam.far_anchor if far is None else far
    cuts = segment_polyline_intersections(seg, lam.vertices, tol)
    pts = [seg.u, *cuts, seg.v]
    delta = 0.0
    for p, q in zip(pts, pts[1:]):
        mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        anchor = near if linf_dist(mid, near) <= linf_dist(mid, far) else far
        delta = max(delta, linf_dist(p, anchor), linf_dist(q, anchor))
    for c in cuts:
        # on the bisector: both anchors are (nearly) equidistant
        delta = max(delta, min(linf_dist(c, near), linf_dist(c, far)))
    return delta


def block_delta(loc: np.ndarray, L: float, W: float) -> np.ndarray:
    """Per-row ``max_t min(d(p(t), h), d(p(t), f))`` for local rows.

    ``h = (0, 0)`` and ``f = (L, W)``; the rows lie in ``[0, L] x [0, W]``.
    Along a segment ``d_h - d_f`` is linear between the parameters where
    ``x - y`` equals ``0`` or ``L - W``, so each of the (at most three) pieces
    has at most one crossing and the maximum of the lower envelope sits at an
    endpoint or at one of those crossings.
    """
    x0, y0, x1, y1 = loc[:, 0], loc[:, 1], loc[:, 2], loc[:, 3]
    dx, dy = x1 - x0, y1 - y0

    def env(t):
        x, y = x0 + t * dx, y0 + t * dy
        dh = np.maximum(x, y)
        df = np.maximum(L - x, W - y)
        return dh - df, np.minimum(dh, df)

    g0, best = env(np.zeros_like(x0))
    g1, m1 = env(np.ones_like(x0))
    best = np.maximum(best, m1)
    s0 = x0 - y0
    ds = dx - dy
    with np.errstate(divide="ignore", invalid="ignore"):
        b1 = np.where(ds != 0, (0.0 - s0) / ds, 2.0)
        b2 = np.where(ds != 0, (L - W - s0) / ds, 2.0)
    b1 = np.clip(np.nan_to_num(b1, nan=2.0), 0.0, 1.0)
    b2 = np.clip(np.nan_to_num(b2, nan=2.0), 0.0, 1.0)
    lo, hi = np.minimum(b1, b2), np.maximum(b1, b2)
    glo, _ = env(lo)
    ghi, _ = env(hi)
    for ta, tb, ga, gb in ((np.zeros_like(x0), lo, g0, glo), (lo, hi, glo, ghi),
                           (hi, np.ones_like(x0), ghi, g1)):
        cross = (ga * gb <= 0) & (ga != gb)
        with np.errstate(divide="ignore", invalid="ignore"):
            t = ta + (tb - ta) * np.where(cross, ga / (ga - gb), 0.0)
        _, m = env(t)
        best = np.where(cross, np.maximum(best, m), best)
    return best


def anchored_squares(lm: LocalMap, L: float, W: float, sigma: float,
                     config: int) -> tuple[Square, Square]:
    """World squares anchored at ``h``/``f`` (config 1) or ``e``/``g`` (config 2)."""
    if config == 1:
        s1 = Square(Point(0.0, 0.0), sigma)
        s2 = Square(Point(L - sigma, W - sigma), sigma)
    else:
        s1 = Square(Point(0.0, W - sigma), sigma)
        s2 = Square(Point(L - sigma, 0.0), sigma)
    return lm.square_to_world(s1), lm.square_to_world(s2)


def _world_polyline(lm: LocalMap, pl: PartitionPolyline) -> tuple[Point, ...]:
    if not lm.transposed:
        return tuple(pl.vertices)
    return tuple(p.swapped() for p in pl.vertices)


def solve_cover(source, tol: float = TOL, block: int = BLOCK) -> SquarePairSolution:
    """Minimum common side of two squares whose union covers every segment."""
    source = as_source(source)
    frame = build_cover_frame(source)
    lm = frame.local
    L, W = frame.L, frame.W
    sigma1 = sigma2 = 0.0
    for rows in source.blocks(block):
        loc = lm.to_local(rows)
        sigma1 = max(sigma1, float(block_delta(loc, L, W).max()))
        refl = loc.copy()
        refl[:, [1, 3]] = W - loc[:, [1, 3]]
        sigma2 = max(sigma2, float(block_delta(refl, L, W).max()))
    config = 1 if sigma1 <= sigma2 else 2
    sigma = min(sigma1, sigma2)
    s1, s2 = anchored_squares(lm, L, W, sigma, config)
    lam = build_partition_polylines(frame)[config - 1]
    return SquarePairSolution("cover", sigma, s1, s2, config, frame.n, frame.rect,
                              (_world_polyline(lm, lam),))
