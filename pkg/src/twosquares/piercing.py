"""Exact two-square hitting via two-point piercing of L-infinity neighbourhoods.

A square of half-side ``r`` centred at ``z`` hits a segment iff ``z`` lies in
the segment's ``r``-neighbourhood: its bounding box grown by ``r`` cut by a
slab around its supporting line. Two squares hit everything iff two points
pierce all neighbourhoods. If they do, each point can be moved to a vertex of
the intersection of the neighbourhoods it pierces, i.e. to a crossing of two
boundary lines, so a finite candidate set decides feasibility. The optimum
radius is then found by bisection.

Large inputs are handled by constraint generation: solve exactly on a small
working set, scan the full source for segments the current pair misses, add
the worst ones and repeat. A working-set optimum is a lower bound, so the loop
stops at the true optimum.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .geom import linf_point_segment
from .source import BLOCK, SegmentSource


@dataclass(frozen=True)
class Piercing:
    radius: float
    z1: tuple[float, float]
    z2: tuple[float, float]


def boundary_lines(segs: np.ndarray, r: float) -> np.ndarray:
    """Rows ``(a, b, c)`` of the lines ``a*x + b*y = c`` bounding each neighbourhood."""
    x1, y1, x2, y2 = segs.T
    lo_x, hi_x = np.minimum(x1, x2), np.maximum(x1, x2)
    lo_y, hi_y = np.minimum(y1, y2), np.maximum(y1, y2)
    one, zero = np.ones_like(x1), np.zeros_like(x1)
    rows = [
        np.stack([one, zero, lo_x - r], 1),
        np.stack([one, zero, hi_x + r], 1),
        np.stack([zero, one, lo_y - r], 1),
        np.stack([zero, one, hi_y + r], 1),
    ]
    nx, ny = y2 - y1, x1 - x2
    slanted = (nx != 0) & (ny != 0)
    if slanted.any():
        nx, ny = nx[slanted], ny[slanted]
        norm = np.abs(nx) + np.abs(ny)
        nx, ny = nx / norm, ny / norm
        c = nx * x1[slanted] + ny * y1[slanted]
        rows.append(np.stack([nx, ny, c - r], 1))
        rows.append(np.stack([nx, ny, c + r], 1))
    return np.concatenate(rows)


def _candidates(lines: np.ndarray) -> np.ndarray:
    a, b, c = lines.T
    i, j = np.triu_indices(len(lines), 1)
    det = a[i] * b[j] - a[j] * b[i]
    ok = np.abs(det) > 1e-12
    i, j, det = i[ok], j[ok], det[ok]
    x = (c[i] * b[j] - c[j] * b[i]) / det
    y = (a[i] * c[j] - a[j] * c[i]) / det
    return np.stack([x, y], 1)


def pierce(segs: np.ndarray, r: float, eps: float) -> tuple[np.ndarray, np.ndarray] | None:
    """Two points within ``r + eps`` of every segment, or ``None``."""
    pts = _candidates(boundary_lines(segs, r))
    if len(pts) == 0:
        pts = segs[:1, :2].copy()
    dist = linf_point_segment(pts[:, 0], pts[:, 1], segs)
    masks = dist <= r + eps
    keep = masks.any(axis=1)
    pts, masks = pts[keep], masks[keep]
    if len(pts) == 0:
        return None
    full = masks.all(axis=1)
    if full.any():
        k = int(np.argmax(full))
        return pts[k], pts[k]
    packed = np.packbits(masks, axis=1)
    _, first = np.unique(packed, axis=0, return_index=True)
    pts, masks = pts[first], masks[first]
    miss = (~masks).astype(np.float32)
    both = miss @ miss.T
    hit = np.argwhere(both == 0)
    if len(hit) == 0:
        return None
    i, j = hit[0]
    return pts[i], pts[j]


def exact_piercing(segs: np.ndarray, lo: float = 0.0, scale: float | None = None,
                   hi: float | None = None) -> Piercing:
    """Smallest radius at which two points pierce every neighbourhood."""
    segs = np.asarray(segs, dtype=float).reshape(-1, 4)
    xs, ys = segs[:, [0, 2]], segs[:, [1, 3]]
    extent = max(float(xs.max() - xs.min()), float(ys.max() - ys.min()))
    scale = max(1.0, extent if scale is None else scale)
    eps = 1e-12 * scale
    hi = extent / 2 if hi is None else min(hi, extent / 2)
    if len(segs) <= 2:
        # each segment gets its own point
        return Piercing(0.0, tuple(segs[0, :2]), tuple(segs[-1, :2]))
    lo = min(max(lo, 0.0), hi)
    found = pierce(segs, lo, eps)
    if found is None:
        found = pierce(segs, hi, eps)
        if found is None:  # numerically hopeless; the box centre always works
            c = (float(xs.min() + xs.max()) / 2, float(ys.min() + ys.max()) / 2)
            return Piercing(hi, c, c)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            res = pierce(segs, mid, eps)
            if res is None:
                lo = mid
            else:
                hi, found = mid, res
        r = hi
    else:
        r = lo
    z1, z2 = found
    return Piercing(r, (float(z1[0]), float(z1[1])), (float(z2[0]), float(z2[1])))


def coverage_radius(segs: np.ndarray, z1, z2) -> np.ndarray:
    """Per-segment radius needed by the nearer of the two centres."""
    zx = np.array([z1[0], z2[0]])
    zy = np.array([z1[1], z2[1]])
    return linf_point_segment(zx, zy, segs).min(axis=0)


@dataclass
class PiercingStats:
    passes: int = 0
    working_set: int = 0


def streaming_piercing(source: SegmentSource, seed: np.ndarray, scale: float,
                       batch: int = 8, block: int = BLOCK,
                       stats: PiercingStats | None = None) -> Piercing:
    """Constraint generation over a resettable source.

    Memory is one block plus the working set, which only ever receives
    segments missed by the current optimum of the previous working set.
    """
    work = np.unique(np.asarray(seed, dtype=float).reshape(-1, 4), axis=0)
    eps = 1e-12 * max(1.0, scale)
    lo = 0.0
    hi = None
    stats = stats if stats is not None else PiercingStats()
    while True:
        sol = exact_piercing(work, lo, scale, hi)
        lo = sol.radius
        worst: list[tuple[float, int, tuple]] = []
        need = sol.radius
        seen = 0
        for rows in source.blocks(block):
            rad = coverage_radius(rows, sol.z1, sol.z2)
            need = max(need, float(rad.max()))
            bad = np.nonzero(rad > sol.radius + eps)[0]
            if len(bad):
                top = bad[np.argsort(-rad[bad])[:batch]]
                for k in top:
                    item = (float(rad[k]), -(seen + int(k)), tuple(rows[k]))
                    if len(worst) < batch:
                        heapq.heappush(worst, item)
                    else:
                        heapq.heappushpop(worst, item)
            seen += len(rows)
        stats.passes += 1
        if not worst:
            stats.working_set = len(work)
            return Piercing(need, sol.z1, sol.z2)
        hi = need
        added = np.array([w[2] for w in worst], dtype=float)
        work = np.unique(np.concatenate([work, added]), axis=0)
