"""Sequential, resettable segment sources.

Solvers only ever see a cursor: ``reset()`` restarts it, ``next()`` yields one
segment and ``read_block(k)`` yields up to ``k`` rows of ``x1 y1 x2 y2`` as a
float array. Both counters are public so tests can audit access patterns.
"""

from __future__ import annotations

import io
import math
import sys
from pathlib import Path
from typing import Iterator

import numpy as np

from .geom import Segment, segments_array

BLOCK = 4096


class InstanceError(ValueError):
    """Malformed or empty instance."""


class SegmentSource:
    """Base cursor. Subclasses implement ``_restart`` and ``_read``."""

    def __init__(self):
        self.resets = 0
        self.items_read = 0

    def reset(self) -> None:
        self.resets += 1
        self._restart()

    def read_block(self, size: int = BLOCK) -> np.ndarray:
        block = self._read(size)
        self.items_read += len(block)
        return block

    def next(self) -> Segment | None:
        block = self.read_block(1)
        if len(block) == 0:
            return None
        return Segment.of(*block[0])

    def blocks(self, size: int = BLOCK) -> Iterator[np.ndarray]:
        """Reset, then iterate over the whole source in fixed-size blocks."""
        self.reset()
        while True:
            block = self.read_block(size)
            if len(block) == 0:
                return
            yield block

    def _restart(self) -> None:
        raise NotImplementedError

    def _read(self, size: int) -> np.ndarray:
        raise NotImplementedError


class ArraySource(SegmentSource):
    """In-memory source over a list of segments or an ``(n, 4)`` array."""

    def __init__(self, segments):
        super().__init__()
        self._data = segments_array(segments)
        self._pos = 0

    def __len__(self):
        return len(self._data)

    def _restart(self) -> None:
        self._pos = 0

    def _read(self, size: int) -> np.ndarray:
        block = self._data[self._pos:self._pos + size]
        self._pos += len(block)
        return block


def _parse_line(line: str, lineno: int) -> tuple[float, float, float, float] | None:
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    parts = text.split()
    if len(parts) != 4:
        raise InstanceError(f"line {lineno}: expected 4 numbers, got {len(parts)}")
    try:
        vals = tuple(float(p) for p in parts)
    except ValueError:
        raise InstanceError(f"line {lineno}: cannot parse {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise InstanceError(f"line {lineno}: non-finite coordinate")
    return vals  # type: ignore[return-value]


class TextSource(SegmentSource):
    """Parses the ``x1 y1 x2 y2`` line format from a re-openable stream."""

    def __init__(self):
        super().__init__()
        self._stream: io.TextIOBase | None = None
        self._lineno = 0

    def _open(self) -> io.TextIOBase:
        raise NotImplementedError

    def _restart(self) -> None:
        self.close()
        self._stream = self._open()
        self._lineno = 0

    def close(self) -> None:
        if self._stream is not None:
            self._stream.close()
            self._stream = None

    def _read(self, size: int) -> np.ndarray:
        if self._stream is None:
            raise RuntimeError("source read before reset()")
        rows = []
        while len(rows) < size:
            line = self._stream.readline()
            if not line:
                break
            self._lineno += 1
            row = _parse_line(line, self._lineno)
            if row is not None:
                rows.append(row)
        return np.array(rows, dtype=float).reshape(-1, 4)


class FileSource(TextSource):
    """Re-reads the file on every reset, so nothing is held in memory."""

    def __init__(self, path):
        super().__init__()
        self.path = Path(path)
        if not self.path.is_file():
            raise InstanceError(f"cannot read {self.path}")

    def _open(self):
        return open(self.path, "r", encoding="utf-8")


class BufferedTextSource(TextSource):
    """Text held in memory; used for standard input, which cannot be rewound."""

    def __init__(self, text: str):
        super().__init__()
        self._text = text

    def _open(self):
        return io.StringIO(self._text)


def parse_instance(path=None) -> SegmentSource:
    """Open an instance file (``None`` or ``'-'`` reads standard input).

    Validates every line and rejects empty instances up front.
    """
    if path is None or str(path) == "-":
        src: TextSource = BufferedTextSource(sys.stdin.read())
    else:
        src = FileSource(path)
    count = sum(len(b) for b in src.blocks())
    if count == 0:
        src.close()
        raise InstanceError("empty instance")
    src.close()
    # validation is not part of any solver's access pattern
    src.resets = 0
    src.items_read = 0
    return src


def as_source(obj) -> SegmentSource:
    if isinstance(obj, SegmentSource):
        return obj
    return ArraySource(obj)


def count_segments(source: SegmentSource) -> int:
    return sum(len(b) for b in source.blocks())
