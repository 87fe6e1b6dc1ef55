"""Direct feasibility checks of reported solutions, streamed in blocks."""

from __future__ import annotations

import numpy as np

from .geom import TOL, Disk, Square
from .source import BLOCK, as_source


def _inside(xs, ys, sq: Square, tol):
    return ((xs >= sq.min_x - tol) & (xs <= sq.max_x + tol)
            & (ys >= sq.min_y - tol) & (ys <= sq.max_y + tol))


def _clip_interval(rows: np.ndarray, sq: Square, tol: float):
    """Liang-Barsky parameter interval of each row inside ``sq`` (``t0 > t1`` if empty)."""
    x0, y0 = rows[:, 0], rows[:, 1]
    dx, dy = rows[:, 2] - x0, rows[:, 3] - y0
    t0 = np.zeros(len(rows))
    t1 = np.ones(len(rows))
    for d, num in ((-dx, x0 - (sq.min_x - tol)), (dx, (sq.max_x + tol) - x0),
                   (-dy, y0 - (sq.min_y - tol)), (dy, (sq.max_y + tol) - y0)):
        with np.errstate(divide="ignore", invalid="ignore"):
            t = num / d
        pos, neg, flat = d > 0, d < 0, d == 0
        t1 = np.where(pos, np.minimum(t1, t), t1)
        t0 = np.where(neg, np.maximum(t0, t), t0)
        t0 = np.where(flat & (num < 0), 2.0, t0)
    return t0, t1


def covered_rows(rows: np.ndarray, s1: Square, s2: Square, tol: float = TOL) -> np.ndarray:
    """Rows whose every point lies in ``s1`` or ``s2``.

    ``s1`` meets a row in one parameter interval; whatever is left over must
    sit in ``s2``, and being convex it does iff its ends do.
    """
    t0, t1 = _clip_interval(rows, s1, tol)
    empty = t0 > t1
    x0, y0 = rows[:, 0], rows[:, 1]
    dx, dy = rows[:, 2] - x0, rows[:, 3] - y0
    at = lambda t: (x0 + t * dx, y0 + t * dy)
    u_in = _inside(x0, y0, s2, tol)
    v_in = _inside(rows[:, 2], rows[:, 3], s2, tol)
    ok = np.where(empty, u_in & v_in, True)
    ok &= np.where(~empty & (t0 > 0), u_in & _inside(*at(t0), s2, tol), True)
    ok &= np.where(~empty & (t1 < 1), v_in & _inside(*at(t1), s2, tol), True)
    return ok


def hit_rows(rows: np.ndarray, s1: Square, s2: Square, tol: float = TOL) -> np.ndarray:
    out = np.zeros(len(rows), dtype=bool)
    for sq in (s1, s2):
        t0, t1 = _clip_interval(rows, sq, tol)
        out |= t0 <= t1
    return out


def contained_rows(rows: np.ndarray, s1: Square, s2: Square, tol: float = TOL) -> np.ndarray:
    out = np.zeros(len(rows), dtype=bool)
    for sq in (s1, s2):
        out |= _inside(rows[:, 0], rows[:, 1], sq, tol) & _inside(rows[:, 2], rows[:, 3], sq, tol)
    return out


def disk_rows(rows: np.ndarray, disks: tuple[Disk, Disk], problem: str, tol: float = TOL):
    """Coverage / hitting / containment by two disks."""
    def dist_pt(x, y, d):
        return np.hypot(x - d.center.x, y - d.center.y)

    def dist_seg(d):
        x0, y0 = rows[:, 0], rows[:, 1]
        dx, dy = rows[:, 2] - x0, rows[:, 3] - y0
        ll = dx * dx + dy * dy
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.where(ll > 0, ((d.center.x - x0) * dx + (d.center.y - y0) * dy) / ll, 0.0)
        t = np.clip(t, 0, 1)
        return dist_pt(x0 + t * dx, y0 + t * dy, d)

    if problem == "hit":
        return np.any([dist_seg(d) <= d.radius + tol for d in disks], axis=0)
    ins = [(dist_pt(rows[:, 0], rows[:, 1], d) <= d.radius + tol,
            dist_pt(rows[:, 2], rows[:, 3], d) <= d.radius + tol) for d in disks]
    if problem == "rcover":
        return (ins[0][0] & ins[0][1]) | (ins[1][0] & ins[1][1])
    # the first disk meets a segment in one chord; the rest must be in the second
    a, b = disks
    ia, ib = ins
    x0, y0 = rows[:, 0], rows[:, 1]
    dx, dy = rows[:, 2] - x0, rows[:, 3] - y0
    ll = dx * dx + dy * dy
    fx, fy = x0 - a.center.x, y0 - a.center.y
    bq = fx * dx + fy * dy
    cq = fx * fx + fy * fy - (a.radius + tol) ** 2
    disc = bq * bq - ll * cq
    with np.errstate(divide="ignore", invalid="ignore"):
        sq = np.sqrt(np.maximum(disc, 0))
        t0 = np.where(ll > 0, (-bq - sq) / ll, 0.0)
        t1 = np.where(ll > 0, (-bq + sq) / ll, 0.0)
    miss = (disc < 0) | (t1 < 0) | (t0 > 1) | ((ll == 0) & ~ia[0])
    t0, t1 = np.clip(t0, 0, 1), np.clip(t1, 0, 1)
    inb = lambda t: dist_pt(x0 + t * dx, y0 + t * dy, b) <= b.radius + tol
    return np.where(miss, ib[0] & ib[1],
                    np.where(t0 > 0, ib[0] & inb(t0), True)
                    & np.where(t1 < 1, ib[1] & inb(t1), True))


CHECKS = {"cover": covered_rows, "hit": hit_rows, "rcover": contained_rows}


def verify_solution(solution, source, tol: float = TOL, block: int = BLOCK) -> bool:
    """True iff the two squares (or disks) serve every segment of ``source``."""
    source = as_source(source)
    from .twocenter import DiskPairSolution

    for rows in source.blocks(block):
        if isinstance(solution, DiskPairSolution):
            ok = disk_rows(rows, solution.disks, solution.mode, tol)
        else:
            ok = CHECKS[solution.problem](rows, solution.s1, solution.s2, tol)
        if not ok.all():
            return False
    return True
