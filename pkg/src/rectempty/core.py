"""Geometry primitives shared by every structure in the package.

All rectangles, in real coordinates and in rank space alike, are
semi-open: ``(x_lo, x_hi] x (y_lo, y_hi]``.  Every emptiness answer in
this package is defined against that one membership test, which keeps
boundary handling consistent with rank arithmetic: the number of values
in ``(a, b]`` always equals ``rank(b) - rank(a)``.

Point sets are stored as ``(n, 2)`` float64 arrays (column 0 = x,
column 1 = y).  :class:`UnitPoint` is the scalar point type used at API
edges and in tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

__all__ = [
    "UnitPoint",
    "SemiOpenRect",
    "RankRect",
    "RankPoint",
    "ClampedQuery",
    "sample_points",
    "rect_contains",
    "clamp_query",
    "rank_space",
    "load_points",
    "save_points",
]


@dataclass(frozen=True, slots=True)
class UnitPoint:
    """A point of the unit square."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.x <= 1.0 and 0.0 <= self.y <= 1.0):
            raise ValueError(f"point ({self.x}, {self.y}) outside the unit square")


@dataclass(frozen=True, slots=True)
class SemiOpenRect:
    """Axis-aligned rectangle ``(x_lo, x_hi] x (y_lo, y_hi]``.

    Degenerate rectangles (zero width or height) are valid and contain
    no point.
    """

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self) -> None:
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise ValueError(f"reversed rectangle intervals: {self}")

    @property
    def width(self) -> float:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> float:
        return self.y_hi - self.y_lo

    @property
    def area(self) -> float:
        return self.width * self.height

    def contains(self, x: float, y: float) -> bool:
        return self.x_lo < x <= self.x_hi and self.y_lo < y <= self.y_hi


@dataclass(frozen=True, slots=True)
class RankRect:
    """Integer rectangle ``(i1, i2] x (j1, j2]`` over rank coordinates."""

    i1: int
    i2: int
    j1: int
    j2: int

    def __post_init__(self) -> None:
        if self.i1 > self.i2 or self.j1 > self.j2:
            raise ValueError(f"reversed rank intervals: {self}")
        if self.i1 < 0 or self.j1 < 0:
            raise ValueError(f"negative rank coordinates: {self}")

    @property
    def degenerate(self) -> bool:
        """True when the rectangle cannot contain any rank-space point."""
        return self.i1 == self.i2 or self.j1 == self.j2


@dataclass(frozen=True, slots=True)
class RankPoint:
    """A rank-space point; both coordinates are ranks in ``[1, n]``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise ValueError(f"rank coordinates start at 1: {self}")


@dataclass(frozen=True, slots=True)
class ClampedQuery:
    """Result of clamping a query rectangle to the unit square."""

    rect: SemiOpenRect
    empty: bool


def sample_points(n: int, seed: int) -> np.ndarray:
    """Sample ``n`` points i.i.d. uniform on the unit square.

    Uses NumPy's PCG64 generator (``numpy.random.default_rng``), so a
    fixed seed reproduces the same points bit for bit on any platform
    with the same NumPy version.  Returns an ``(n, 2)`` float64 array.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    return rng.random((n, 2))


def rect_contains(rect: SemiOpenRect, p: "UnitPoint | tuple[float, float]") -> bool:
    """Semi-open membership test for a single point."""
    if isinstance(p, UnitPoint):
        return rect.contains(p.x, p.y)
    return rect.contains(p[0], p[1])


def clamp_query(rect: SemiOpenRect) -> ClampedQuery:
    """Intersect a query with the unit square.

    Queries that fall entirely outside (or are degenerate after the
    clamp) are flagged empty so callers can answer without any lookup.
    """
    x_lo = max(rect.x_lo, 0.0)
    y_lo = max(rect.y_lo, 0.0)
    x_hi = min(rect.x_hi, 1.0)
    y_hi = min(rect.y_hi, 1.0)
    if x_lo >= x_hi or y_lo >= y_hi:
        return ClampedQuery(SemiOpenRect(0.0, 0.0, 0.0, 0.0), True)
    return ClampedQuery(SemiOpenRect(x_lo, x_hi, y_lo, y_hi), False)


def rank_space(points: np.ndarray) -> np.ndarray:
    """Map a 2-d point set to its rank-space permutation.

    Returns an int64 array ``perm`` of length n where ``perm[k]`` is the
    y-rank (1-based) of the point with x-rank ``k + 1``.  Coordinate
    ties, possible only in hand-written files, are broken by input index
    so ranks stay distinct.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an (n, 2) array")
    n = pts.shape[0]
    idx = np.arange(n)
    order_x = np.lexsort((idx, pts[:, 0]))
    order_y = np.lexsort((idx, pts[:, 1]))
    y_rank = np.empty(n, dtype=np.int64)
    y_rank[order_y] = np.arange(1, n + 1)
    return y_rank[order_x]


def save_points(path: str, points: np.ndarray) -> None:
    """Write a point set to ``path``.

    ``.csv`` gets one ``x,y`` line per point; ``.bin`` gets raw
    little-endian float64 pairs.  The extension picks the format.
    """
    pts = np.asarray(points, dtype=np.float64)
    ext = os.path.splitext(path)[1].lower()
    if ext == ".csv":
        with open(path, "w") as fh:
            for x, y in pts:
                fh.write(f"{x!r},{y!r}\n")
    elif ext == ".bin":
        pts.astype("<f8").tofile(path)
    else:
        raise ValueError(f"unknown point file extension {ext!r} (use .csv or .bin)")


def load_points(path: str) -> np.ndarray:
    """Read a point set written by :func:`save_points`.

    Malformed CSV input raises ``ValueError`` naming the offending line.
    """
    ext = os.path.splitext(path)[1].lower()
    if ext == ".csv":
        rows = []
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                parts = line.split(",")
                if len(parts) != 2:
                    raise ValueError(f"{path}:{lineno}: expected 'x,y', got {line!r}")
                try:
                    rows.append((float(parts[0]), float(parts[1])))
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: non-numeric coordinate in {line!r}") from None
        return np.asarray(rows, dtype=np.float64).reshape(-1, 2)
    if ext == ".bin":
        flat = np.fromfile(path, dtype="<f8")
        if flat.size % 2 != 0:
            raise ValueError(f"{path}: odd number of float64 values, not a point file")
        return flat.reshape(-1, 2)
    raise ValueError(f"unknown point file extension {ext!r} (use .csv or .bin)")
