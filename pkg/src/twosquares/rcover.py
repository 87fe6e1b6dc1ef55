"""Restricted covering: every segment must lie inside one of the squares.

Square 1 grows from ``h`` with its top-right corner on the unit-slope line
through ``h``; square 2 grows from ``f`` the same way. A segment's event on
either line is the smallest anchored square containing it, and each segment
simply goes to the square that needs less.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frame import build_cover_frame
from .geom import TOL, Point, Segment
from .lcover import SquarePairSolution, anchored_squares
from .source import BLOCK, as_source


@dataclass(frozen=True)
class RestrictedReferenceLine:
    """Unit-slope line through ``support``.

    ``side=1`` carries the top-right corner of a square anchored at
    ``support`` (its bottom-left corner); ``side=2`` carries the bottom-left
    corner of a square anchored at ``support`` (its top-right corner).
    """

    support: Point
    side: int = 1

    def size_at(self, t: Point) -> float:
        return (t.x - self.support.x) if self.side == 1 else (self.support.x - t.x)

    def at_x(self, x: float) -> Point:
        return Point(x, self.support.y + (x - self.support.x))

    def at_y(self, y: float) -> Point:
        return Point(self.support.x + (y - self.support.y), y)


@dataclass(frozen=True)
class EventPoint:
    location: Point
    sigma: float
    index: int = -1


def rcover_event_point(seg: Segment, line: RestrictedReferenceLine, index: int = -1) -> EventPoint:
    if line.side == 2:
        # point reflection through the support turns the second line into the first
        s = line.support
        refl = lambda p: Point(2 * s.x - p.x, 2 * s.y - p.y)
        ev = rcover_event_point(Segment(refl(seg.u), refl(seg.v)),
                                RestrictedReferenceLine(s, 1), index)
        return EventPoint(refl(ev.location), ev.sigma, index)
    h = line.support
    side = [(p.y - h.y) - (p.x - h.x) for p in (seg.u, seg.v)]
    tp, rp = seg.tp, seg.rp
    if min(side) > 0:
        loc = line.at_y(tp.y)
    elif max(side) < 0:
        loc = line.at_x(rp.x)
    else:
        p = line.at_y(tp.y)
        # the vertical goes through the right endpoint; through the bottom
        # endpoint it would miss segments that cross the line rising to the right
        q = line.at_x(rp.x)
        loc = p if p.x >= q.x else q
    return EventPoint(loc, line.size_at(loc), index)


def block_rcover(loc: np.ndarray, L: float, W: float) -> tuple[np.ndarray, np.ndarray]:
    """Event sizes for both squares, local rows, ``h`` at the origin."""
    xs, ys = loc[:, [0, 2]], loc[:, [1, 3]]
    s1 = np.maximum(xs.max(axis=1), ys.max(axis=1))
    s2 = np.maximum(L - xs.min(axis=1), W - ys.min(axis=1))
    return s1, s2


def solve_rcover(source, tol: float = TOL, block: int = BLOCK) -> SquarePairSolution:
    source = as_source(source)
    frame = build_cover_frame(source)
    lm = frame.local
    L, W = frame.L, frame.W
    best = [[0.0, 0.0], [0.0, 0.0]]
    for rows in source.blocks(block):
        loc = lm.to_local(rows)
        refl = loc.copy()
        refl[:, [1, 3]] = W - loc[:, [1, 3]]
        for k, arr in enumerate((loc, refl)):
            e1, e2 = block_rcover(arr, L, W)
            first = e1 <= e2
            if first.any():
                best[k][0] = max(best[k][0], float(e1[first].max()))
            if (~first).any():
                best[k][1] = max(best[k][1], float(e2[~first].max()))
    values = [max(b) for b in best]
    config = 1 if values[0] <= values[1] else 2
    sigma = values[config - 1]
    s1, s2 = anchored_squares(lm, L, W, sigma, config)
    return SquarePairSolution("rcover", sigma, s1, s2, config, frame.n, frame.rect)
