"""Two congruent disks from two congruent squares.

The circumscribed disks of an optimal square pair are feasible, and the
inscribed disks bound the optimum from below, so the radius is within a
factor of sqrt(2) of optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import Disk
from .lcover import SquarePairSolution


@dataclass(frozen=True)
class DiskPairSolution:
    d1: Disk
    d2: Disk
    radius: float
    lower_bound: float
    mode: str
    squares: SquarePairSolution

    @property
    def disks(self) -> tuple[Disk, Disk]:
        return (self.d1, self.d2)


def approximate_two_center(solution: SquarePairSolution) -> DiskPairSolution:
    sigma = solution.sigma
    radius = sigma * math.sqrt(2.0) / 2.0
    lower = sigma / 2.0
    assert radius <= math.sqrt(2.0) * lower * (1 + 1e-15) + 1e-300
    d1 = Disk(solution.s1.center, radius)
    d2 = Disk(solution.s2.center, radius)
    return DiskPairSolution(d1, d2, radius, lower, solution.problem, solution)
