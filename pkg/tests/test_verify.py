import math

import numpy as np

from twosquares.geom import Disk, Point, Square
from twosquares.verify import contained_rows, covered_rows, disk_rows, hit_rows

S1 = Square(Point(0, 0), 4)
S2 = Square(Point(6, 0), 4)


def test_split_coverage_counts():
    rows = np.array([[0, 2, 10, 2], [1, 1, 9, 1], [5, 0, 5, 4]], float)
    wide = Square(Point(4, 0), 6)
    assert covered_rows(rows, S1, wide).tolist() == [True, True, True]
    # the middle gap x in (4, 6) is in neither square
    assert covered_rows(rows, S1, S2).tolist() == [False, False, False]


def test_hit_and_contain():
    rows = np.array([[3, 3, 5, 5], [4.5, 0, 5.5, 4], [7, 1, 8, 2]], float)
    assert hit_rows(rows, S1, S2).tolist() == [True, False, True]
    assert contained_rows(rows, S1, S2).tolist() == [False, False, True]


def test_disks():
    r = 2 * math.sqrt(2)
    disks = (Disk(Point(2, 2), r), Disk(Point(8, 2), r))
    rows = np.array([[0, 0, 4, 4], [6, 0, 10, 4], [4, 4, 6, 4]], float)
    assert disk_rows(rows, disks, "cover").tolist() == [True, True, False]
    assert disk_rows(rows, disks, "hit").tolist() == [True, True, True]
