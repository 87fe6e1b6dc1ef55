"""Static SVG rendering of an instance and its solution."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402
from matplotlib.patches import Circle, Rectangle  # noqa: E402

from .source import as_source  # noqa: E402

COLORS = ("tab:blue", "tab:red")


def emit_svg(solution, source, path, disks=None) -> None:
    """Segments, both squares (markers when of size zero), optional disks and guides."""
    source = as_source(source)
    plt.rcParams["svg.hashsalt"] = "twosquares"
    fig, ax = plt.subplots(figsize=(6, 6))
    for rows in source.blocks():
        ax.add_collection(LineCollection(rows.reshape(-1, 2, 2), colors="0.3", linewidths=0.8))
    # ids survive into the SVG so downstream tools can find the squares
    for k, (sq, color) in enumerate(zip(solution.squares, COLORS), 1):
        if sq.side == 0:
            (art,) = ax.plot([sq.min_x], [sq.min_y], "o", color=color, markersize=6)
            art.set_gid(f"marker-{k}")
        else:
            art = ax.add_patch(Rectangle((sq.min_x, sq.min_y), sq.side, sq.side,
                                         fill=False, edgecolor=color, linewidth=1.5))
            art.set_gid(f"square-{k}")
    for disk, color in zip(disks or (), COLORS):
        ax.add_patch(Circle((disk.center.x, disk.center.y), disk.radius, fill=False,
                            edgecolor=color, linestyle=":", linewidth=1.0))
    for guide in getattr(solution, "guides", ()):
        ax.plot([p.x for p in guide], [p.y for p in guide], "--", color="0.5", linewidth=1.0)
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.margins(0.05)
    ax.set_title(f"{solution.problem}: sigma = {solution.sigma:.6g}")
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
