"""Two congruent axis-parallel squares covering, hitting or restricted-covering segments."""

from .geom import Disk, Point, Polyline, Rect, Segment, Square
from .lcover import SquarePairSolution, solve_cover
from .source import ArraySource, FileSource, InstanceError, SegmentSource, parse_instance

__all__ = [
    "ArraySource", "Disk", "FileSource", "InstanceError", "Point", "Polyline",
    "Rect", "Segment", "SegmentSource", "Square", "SquarePairSolution",
    "parse_instance", "solve_cover",
]
