import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twosquares.geom import (Point, Polyline, Segment, Square, clip_segment_to_convex_region,
                             clip_segment_to_halfplane, convex_hull, linf_dist,
                             linf_point_segment, point_segment_linf,
                             segment_polyline_intersections, square_covers_segment,
                             square_hits_segment)

coord = st.integers(-50, 50).map(float)
segments = st.builds(Segment.of, coord, coord, coord, coord)


@pytest.mark.parametrize("p, q, expected", [
    ((0, 0), (4, 4), 4.0),
    ((0, 0), (0, 0), 0.0),
    ((2, 8), (10, 3), 8.0),
])
def test_linf_dist_examples(p, q, expected):
    assert linf_dist(Point(*p), Point(*q)) == expected


def test_polyline_crossings():
    vertical = Polyline((Point(5, 0), Point(5, 4)))
    assert segment_polyline_intersections(Segment.of(0, 2, 10, 2), vertical) == [Point(5, 2)]
    assert segment_polyline_intersections(Segment.of(0, 0, 1, 0), vertical) == []
    lam = Polyline((Point(2, 8), Point(5, 5), Point(5, 3), Point(8, 0)))
    # (4,6)-(6,4) runs along the k1-z1 piece up to z1: overlap ends come back
    hits = segment_polyline_intersections(Segment.of(4, 6, 6, 4), lam)
    assert hits == [Point(4, 6), Point(5, 5)]
    hits = segment_polyline_intersections(Segment.of(4, 7, 6, 3), lam)
    assert hits == [Point(5, 5)]


def test_polyline_rejects_backtracking():
    with pytest.raises(ValueError):
        Polyline((Point(1, 0), Point(0, 1)))


@pytest.mark.parametrize("seg, expected", [
    ((3, 2, 7, 2), True),
    ((4, 0, 4, 9), False),
])
def test_hits_unit_square(seg, expected):
    assert square_hits_segment(Square(Point(0, 0), 3), Segment.of(*seg)) is expected


def test_hits_through_corner_region():
    assert square_hits_segment(Square(Point(0, 0), 4), Segment.of(-2, 5, 5, -2))


@pytest.mark.parametrize("sq, seg, expected", [
    (Square(Point(0, 0), 4), (0, 0, 4, 4), True),
    (Square(Point(0, 0), 4), (0, 0, 5, 0), False),
    (Square(Point(6, 0), 4), (6, 0, 10, 4), True),
])
def test_covers(sq, seg, expected):
    assert square_covers_segment(sq, Segment.of(*seg)) is expected


def test_clipping():
    s = Segment.of(0, 0, 10, 4)
    assert clip_segment_to_halfplane(s, 1, 0, 5) == Segment.of(0, 0, 5, 2)
    box = Square(Point(-1, -1), 20)
    assert clip_segment_to_convex_region(s, box) is s
    assert clip_segment_to_convex_region(s, Square(Point(20, 20), 1)) is None


def test_nonfinite_point_rejected():
    with pytest.raises(ValueError):
        Point(math.nan, 0)


def test_hull_is_counterclockwise():
    pts = [Point(0, 0), Point(2, 0), Point(1, 1), Point(2, 2), Point(0, 2), Point(1, 0)]
    hull = convex_hull(pts)
    assert set(hull) == {Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2)}
    area = sum(p.x * q.y - q.x * p.y for p, q in zip(hull, hull[1:] + hull[:1]))
    assert area > 0


@settings(max_examples=200, deadline=None)
@given(segments, coord, coord)
def test_linf_distance_matches_dense_sampling(seg, x, y):
    d = point_segment_linf(Point(x, y), seg)
    ts = np.linspace(0, 1, 4001)
    px = seg.u.x + ts * (seg.v.x - seg.u.x)
    py = seg.u.y + ts * (seg.v.y - seg.u.y)
    sampled = np.max(np.stack([np.abs(px - x), np.abs(py - y)]), axis=0).min()
    assert d <= sampled + 1e-9
    # sampling step bounds the error of the grid minimum
    step = max(abs(seg.v.x - seg.u.x), abs(seg.v.y - seg.u.y)) / 4000
    assert sampled <= d + step + 1e-9


@settings(max_examples=200, deadline=None)
@given(segments, coord, coord, st.integers(0, 40).map(float))
def test_hit_iff_clip_nonempty(seg, x, y, side):
    sq = Square(Point(x, y), side)
    clipped = clip_segment_to_convex_region(seg, sq, 1e-9)
    assert square_hits_segment(sq, seg) == (clipped is not None)


@settings(max_examples=100, deadline=None)
@given(st.lists(segments, min_size=1, max_size=5), coord, coord)
def test_vectorized_distance_agrees(segs, x, y):
    arr = np.array([s.as_tuple() for s in segs])
    out = linf_point_segment(np.array([x]), np.array([y]), arr)[0]
    for s, d in zip(segs, out):
        assert d == pytest.approx(point_segment_linf(Point(x, y), s))
