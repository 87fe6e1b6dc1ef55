import math

import numpy as np
import pytest

from conftest import seeded_instances
from twosquares.geom import Point, Segment, as_segments
from twosquares.oracle import (_cover_feasible, min_cover_square, min_hit_square,
                               oracle_cover, oracle_partition, oracle_two_disk_cover,
                               placement_region, smallest_enclosing_disk)

TWO = np.array([[0, 0, 4, 4], [6, 0, 10, 4]], float)
H = np.array([[0, 0, 0, 10], [10, 0, 10, 10], [3, 5, 7, 5]], float)


@pytest.mark.parametrize("rows, expected", [
    ([[0, 0, 2, 2]], 1.0),
    ([[0, 0, 10, 4]], 5.0),
    ([[5, 5, 5, 5]], 0.0),
    ([[0, 0, 4, 4], [6, 0, 10, 4]], 4.0),
])
def test_oracle_cover(rows, expected):
    assert oracle_cover(np.array(rows, float)) == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("rows, expected", [
    ([[0, 0, 4, 4]], 4.0),
    ([[0, 0, 0, 0]], 0.0),
    ([[0, 0, 10, 4]], 10.0),
])
def test_min_cover_square(rows, expected):
    assert min_cover_square(np.array(rows, float)) == expected


@pytest.mark.parametrize("rows, expected", [
    ([[0, 0, 0, 10], [3, 5, 7, 5]], 3.0),
    ([[1, 2, 3, 4]], 0.0),
    ([[0, 0, 0, 10], [10, 0, 10, 10]], 10.0),
])
def test_min_hit_square(rows, expected):
    assert min_hit_square(np.array(rows, float)) == pytest.approx(expected, abs=1e-8)


def test_partition_examples():
    assert oracle_partition(H, min_hit_square) == pytest.approx(3.0, abs=1e-8)
    assert oracle_partition(TWO, min_cover_square) == 4.0
    single = np.array([[0, 0, 10, 4]], float)
    assert oracle_partition(single, min_hit_square) == 0.0
    assert oracle_partition(single, min_cover_square) == 10.0


def test_two_disk_examples():
    assert oracle_two_disk_cover(np.array([[3, 3, 3, 3]], float)) == 0.0
    assert oracle_two_disk_cover(np.array([[0, 0, 0, 0], [50, 50, 50, 50]], float)) == 0.0
    assert oracle_two_disk_cover(np.array([[0, 0, 2, 2]], float)) == pytest.approx(math.sqrt(2))


def test_enclosing_disk_of_triangle():
    c, r = smallest_enclosing_disk([Point(0, 0), Point(4, 0), Point(0, 3)])
    assert (c.x, c.y, r) == pytest.approx((2, 1.5, 2.5))


def test_placement_regions_are_convex():
    rng = np.random.default_rng(6)
    for _ in range(300):
        s = Segment.of(*rng.integers(0, 50, 4))
        region = placement_region(s, float(rng.uniform(0, 20)))
        assert region.is_convex()
        assert len(region.vertices) <= 6


def test_cover_feasibility_is_monotone():
    rng = np.random.default_rng(7)
    for segs in seeded_instances(7, 60, 1, 6):
        ss = as_segments(segs)
        hx, hy = segs[:, [0, 2]].min(), segs[:, [1, 3]].min()
        fx, fy = segs[:, [0, 2]].max(), segs[:, [1, 3]].max()
        scale = max(fx - hx, fy - hy)
        sizes = np.sort(rng.uniform(0, scale, 8))
        seen = False
        for s in sizes:
            ok = _cover_feasible(ss, (hx, hy, hx + s, hy + s), (fx - s, fy - s, fx, fy), 1e-9)
            assert ok or not seen
            seen = seen or ok


def test_permutation_invariance():
    rng = np.random.default_rng(12)
    for segs in seeded_instances(12, 25, 2, 6):
        shuffled = segs[rng.permutation(len(segs))]
        assert oracle_cover(shuffled) == pytest.approx(oracle_cover(segs), abs=1e-7)
        assert oracle_partition(shuffled, min_hit_square) == pytest.approx(
            oracle_partition(segs, min_hit_square), abs=1e-7)
        assert oracle_two_disk_cover(shuffled) == pytest.approx(oracle_two_disk_cover(segs))
