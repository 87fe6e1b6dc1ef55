import numpy as np
import pytest

from conftest import seeded_instances
from twosquares.frame import build_cover_frame
from twosquares.geom import Point, Polyline, Segment, Square, linf_dist
from twosquares.lcover import (PartitionPolyline, anchored_squares, block_delta,
                               build_partition_polylines, config_delta, solve_cover)
from twosquares.oracle import oracle_cover
from twosquares.source import ArraySource, InstanceError
from twosquares.verify import verify_solution


def frame_with(L, W):
    return build_cover_frame(np.array([[0, 0, L, W]], float))


def coords(pl):
    return [(p.x, p.y) for p in pl.vertices]


def test_polylines_wide_square_frame():
    l1, l2 = build_partition_polylines(frame_with(10, 8))
    assert coords(l1) == [(2, 8), (5, 5), (5, 3), (8, 0)]
    # stored left to right, the listed order read backwards
    assert coords(l2)[::-1] == [(8, 8), (5, 5), (5, 3), (2, 0)]
    assert l1.near_anchor == Point(0, 0) and l1.far_anchor == Point(10, 8)
    assert l2.near_anchor == Point(0, 8) and l2.far_anchor == Point(10, 0)


def test_polylines_collapse_when_narrow():
    l1, l2 = build_partition_polylines(frame_with(10, 4))
    assert coords(l1) == coords(l2) == [(5, 0), (5, 4)]


def test_polylines_carry_the_offset():
    f = build_cover_frame(np.array([[3, -2, 13, 6]], float))
    l1, _ = build_partition_polylines(f)
    assert coords(l1) == [(5, 6), (8, 3), (8, 1), (11, -2)]


@pytest.mark.parametrize("seg, expected", [
    ((0, 0, 4, 4), 4.0),
    ((0, 0, 10, 4), 5.0),
    ((6, 0, 10, 4), 4.0),
])
def test_config_delta_examples(seg, expected):
    lam = PartitionPolyline(Polyline((Point(5, 0), Point(5, 4))), Point(0, 0), Point(10, 4))
    assert config_delta(Segment.of(*seg), lam) == pytest.approx(expected)


def test_solve_two_diagonal(two_diagonal):
    sol = solve_cover(two_diagonal)
    assert sol.sigma == 4
    assert sol.s1 == Square(Point(0, 0), 4)
    assert sol.s2 == Square(Point(6, 0), 4)
    assert sol.problem == "cover" and sol.config == 1


@pytest.mark.parametrize("rows, sigma", [
    ([[0, 0, 2, 2]], 1.0),
    ([[5, 5, 5, 5]], 0.0),
    ([[0, 0, 10, 4]], 5.0),
])
def test_solve_small_examples(rows, sigma):
    assert solve_cover(np.array(rows, float)).sigma == pytest.approx(sigma, abs=1e-12)


def test_empty_rejected():
    with pytest.raises(InstanceError, match="empty instance"):
        solve_cover(np.zeros((0, 4)))


def test_scalar_and_block_forms_agree():
    for segs in seeded_instances(11, 200, 1, 6):
        f = build_cover_frame(segs)
        l1, _ = build_partition_polylines(f)
        lm = f.local
        loc = lm.to_local(segs)
        refl = loc.copy()
        refl[:, [1, 3]] = f.W - loc[:, [1, 3]]
        v1 = block_delta(loc, f.L, f.W)
        v2 = block_delta(refl, f.L, f.W)
        for k, row in enumerate(loc):
            # frame coordinates: local plus the h offset
            s = Segment.of(row[0] + lm.ox, row[1] + lm.oy, row[2] + lm.ox, row[3] + lm.oy)
            assert config_delta(s, l1) == pytest.approx(v1[k], abs=1e-9)
            # the second pairing is the first one on the mirrored rows
            s2 = Segment.of(*(refl[k] + [lm.ox, lm.oy, lm.ox, lm.oy]))
            assert config_delta(s2, l1) == pytest.approx(v2[k], abs=1e-9)


def test_polyline_vertices_are_equidistant():
    rng = np.random.default_rng(5)
    for _ in range(200):
        L = float(rng.uniform(0.1, 50))
        W = float(rng.uniform(0, L))
        for lam in build_partition_polylines(frame_with(L, W)):
            for p in lam.vertices:
                assert linf_dist(p, lam.near_anchor) == pytest.approx(
                    linf_dist(p, lam.far_anchor), abs=1e-9)


def test_feasible_and_minimal():
    for segs in seeded_instances(3, 150, 1, 8):
        sol = solve_cover(segs)
        assert verify_solution(sol, segs)
        if sol.sigma > 0:
            f = build_cover_frame(segs)
            small = sol.sigma * (1 - 1e-6)
            for config in (1, 2):
                s1, s2 = anchored_squares(f.local, f.L, f.W, small, config)
                shrunk = type(sol)("cover", small, s1, s2, config, sol.n, sol.rect)
                assert not verify_solution(shrunk, segs, tol=0.0)


def test_two_passes_only():
    segs = np.random.default_rng(0).uniform(0, 1000, (5000, 4))
    src = ArraySource(segs)
    solve_cover(src)
    assert (src.resets, src.items_read) == (2, 10000)


def test_matches_oracle_on_small_instances():
    for segs in seeded_instances(21, 100, 1, 8):
        sigma = solve_cover(segs).sigma
        assert abs(sigma - oracle_cover(segs)) <= 1e-6 * max(1.0, sigma)
