"""Axis-aligned rectangles in cell coordinates.

Coordinate convention (used everywhere in the package): ``cells[i][j]`` has
i = x-index (horizontal) and j = y-index (vertical). A GridRect covers the
cell columns ``x0, x0+1, ..., x0+w-1`` and rows ``y0, ..., y0+h-1``, all
taken mod n, so rectangles are cyclic (toric) by default. A rect is
"standard" when it does not wrap in either coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RectError


@dataclass(frozen=True)
class GridRect:
    """Cyclic axis-aligned rectangle, sides w (width) and h (height) in cells."""

    x0: int
    w: int
    y0: int
    h: int

    def validate_for(self, n: int) -> None:
        if not (0 <= self.x0 < n and 0 <= self.y0 < n):
            raise RectError(f"corner ({self.x0},{self.y0}) out of range for n={n}")
        if not (1 <= self.w <= n and 1 <= self.h <= n):
            raise RectError(f"sides ({self.w},{self.h}) out of range for n={n}")

    def is_standard(self, n: int) -> bool:
        return self.x0 + self.w <= n and self.y0 + self.h <= n

    def x_cells(self, n: int) -> list[int]:
        return [(self.x0 + k) % n for k in range(self.w)]

    def y_cells(self, n: int) -> list[int]:
        return [(self.y0 + k) % n for k in range(self.h)]

    @property
    def key(self) -> tuple[int, int, int, int]:
        """Tie-break key: lexicographic on (x0, y0, w, h)."""
        return (self.x0, self.y0, self.w, self.h)

    def as_tuple(self) -> tuple[int, int, int, int]:
        """Display order (x0, w, y0, h)."""
        return (self.x0, self.w, self.y0, self.h)

    def normalized(self, n: int) -> dict:
        """Corner coordinates in [0,1] units (end coordinates may exceed 1 on wrap)."""
        return {
            "x": [self.x0 / n, (self.x0 + self.w) / n],
            "y": [self.y0 / n, (self.y0 + self.h) / n],
        }


@dataclass(frozen=True)
class FracRect:
    """Rectangle [x1,x2] x [y1,y2] with real coordinates in the unit square."""

    x1: float
    x2: float
    y1: float
    y2: float

    def __post_init__(self):
        if not (0.0 <= self.x1 <= self.x2 <= 1.0 and 0.0 <= self.y1 <= self.y2 <= 1.0):
            raise RectError(f"fractional rect {self} outside the unit square")
