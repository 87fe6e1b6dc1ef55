import numpy as np
import pytest

from conftest import seeded_instances
from twosquares.piercing import (PiercingStats, coverage_radius, exact_piercing, pierce,
                                 streaming_piercing)
from twosquares.source import ArraySource

H = np.array([[0, 0, 0, 10], [10, 0, 10, 10], [3, 5, 7, 5]], float)


def test_h_instance_radius():
    sol = exact_piercing(H)
    assert sol.radius == pytest.approx(1.5, abs=1e-9)
    assert coverage_radius(H, sol.z1, sol.z2).max() <= 1.5 + 1e-9


def test_pierce_threshold():
    assert pierce(H, 1.5, 1e-12) is not None
    assert pierce(H, 1.4, 0.0) is None


def test_one_point_suffices_for_a_common_crossing():
    segs = np.array([[0, 0, 4, 4], [0, 4, 4, 0], [2, -1, 2, 9]], float)
    z1, z2 = pierce(segs, 0.0, 1e-12)
    assert coverage_radius(segs, z1, z2).max() <= 1e-9


@pytest.mark.parametrize("batch", [1, 3, 8])
def test_streaming_agrees_with_direct(batch):
    for segs in seeded_instances(41, 25, 3, 12):
        direct = exact_piercing(segs).radius
        stats = PiercingStats()
        src = ArraySource(segs)
        sol = streaming_piercing(src, segs[:2], 100.0, batch=batch, block=7, stats=stats)
        assert sol.radius == pytest.approx(direct, abs=1e-8)
        assert stats.passes == src.resets
        assert coverage_radius(segs, sol.z1, sol.z2).max() <= sol.radius + 1e-9
