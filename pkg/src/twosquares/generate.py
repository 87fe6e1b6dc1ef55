"""Seeded random instances."""

from __future__ import annotations

import numpy as np

SPAN = 1000.0
CLUSTER_RADIUS = 100.0


def _in_disk(rng: np.random.Generator, center: np.ndarray, radius: float, n: int) -> np.ndarray:
    ang = rng.uniform(0.0, 2 * np.pi, n)
    rad = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    return center + np.stack([rad * np.cos(ang), rad * np.sin(ang)], 1)


def uniform_instance(n: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, SPAN, (n, 4))


def clustered_instance(n: int, seed: int = 0) -> np.ndarray:
    """Segments drawn inside two disjoint disks of radius 100."""
    rng = np.random.default_rng(seed)
    r = CLUSTER_RADIUS
    while True:
        centers = rng.uniform(r, SPAN - r, (2, 2))
        if np.linalg.norm(centers[0] - centers[1]) > 2 * r:
            break
    which = rng.integers(0, 2, n)
    out = np.empty((n, 4))
    for k in (0, 1):
        idx = np.nonzero(which == k)[0]
        out[idx, :2] = _in_disk(rng, centers[k], r, len(idx))
        out[idx, 2:] = _in_disk(rng, centers[k], r, len(idx))
    return out


def format_instance(segs: np.ndarray) -> str:
    return "".join(f"{a:.6f} {b:.6f} {c:.6f} {d:.6f}\n" for a, b, c, d in segs)


def write_instance(segs: np.ndarray, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_instance(segs))
