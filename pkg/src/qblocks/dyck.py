"""Dyck paths: enumeration, canonical order, local shapes, wedge removal.

A Dyck path of 2N steps is stored as its height sequence
(h(0), h(1), ..., h(2N)) with h(0) = h(2N) = 0, steps of +-1, and all heights
nonnegative.  The canonical index order used by every matrix downstream is
ascending lexicographic on height sequences; it refines the pointwise partial
order, which makes the incidence matrices unit upper triangular.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

#: hard cap on enumeration size; C_12 = 208012 paths (contract requires >= 10)
ENUMERATION_CAP = 12


class Shape(enum.Enum):
    """Local shape of two consecutive steps of a Dyck path."""

    UP_WEDGE = "up-wedge"
    DOWN_WEDGE = "down-wedge"
    UP_SLOPE = "up-slope"
    DOWN_SLOPE = "down-slope"

    @property
    def is_wedge(self) -> bool:
        return self in (Shape.UP_WEDGE, Shape.DOWN_WEDGE)

    @property
    def is_slope(self) -> bool:
        return not self.is_wedge


@dataclass(frozen=True, order=True)
class DyckPath:
    """A Dyck path as a height sequence of odd length 2N+1.

    Ordering of DyckPath values is lexicographic on heights, which is the
    canonical matrix index order.
    """

    heights: tuple[int, ...]

    def __post_init__(self):
        h = self.heights
        if not isinstance(h, tuple):
            object.__setattr__(self, "heights", tuple(h))
            h = self.heights
        if len(h) % 2 == 0 or len(h) == 0:
            raise ValueError(f"height sequence must have odd length 2N+1, got {len(h)}")
        if h[0] != 0 or h[-1] != 0:
            raise ValueError(f"path must start and end at height 0: {h}")
        for j in range(1, len(h)):
            if abs(h[j] - h[j - 1]) != 1:
                raise ValueError(f"step {j} is not +-1 in {h}")
            if h[j] < 0:
                raise ValueError(f"negative height at position {j} in {h}")

    @property
    def n(self) -> int:
        """Half-length N (the path has 2N steps)."""
        return (len(self.heights) - 1) // 2

    def __len__(self) -> int:
        return len(self.heights)

    def __getitem__(self, j: int) -> int:
        return self.heights[j]

    @classmethod
    def from_steps(cls, steps: str) -> "DyckPath":
        """Parse a step string over {U, D}, e.g. "UDUD" -> (0, 1, 0, 1, 0)."""
        heights = [0]
        for i, ch in enumerate(steps):
            if ch == "U":
                heights.append(heights[-1] + 1)
            elif ch == "D":
                heights.append(heights[-1] - 1)
            else:
                raise ValueError(f"invalid step {ch!r} at index {i}: expected 'U' or 'D'")
            if heights[-1] < 0:
                raise ValueError(f"path drops below zero at index {i}")
        if heights[-1] != 0:
            raise ValueError(f"path does not close at height 0 (ends at {heights[-1]})")
        return cls(tuple(heights))

    def steps(self) -> str:
        """Render as a step string over {U, D}."""
        return "".join(
            "U" if b > a else "D" for a, b in zip(self.heights, self.heights[1:])
        )

    def __str__(self) -> str:
        return self.steps() if self.n else "(trivial)"


def parse_path(s: str) -> DyckPath:
    """Parse a CLI step string; rejects strings going negative or not closing."""
    return DyckPath.from_steps(s)


@functools.lru_cache(maxsize=None)
def enumerate_paths(n: int, cap: int = ENUMERATION_CAP) -> tuple[DyckPath, ...]:
    """All Dyck paths of 2n steps, ascending lexicographically by heights.

    The result has Catalan-number length C_n and its order is the canonical
    matrix index order used everywhere downstream.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")
    out: list[DyckPath] = []
    heights = [0]

    def extend(h: int, left: int) -> None:
        if left == 0:
            out.append(DyckPath(tuple(heights)))
            return
        # trying the down-step first yields ascending lexicographic order
        for nh in (h - 1, h + 1):
            if 0 <= nh <= left - 1:
                heights.append(nh)
                extend(nh, left - 1)
                heights.pop()

    extend(0, 2 * n)
    return tuple(out)


def local_shape(path: DyckPath, j: int) -> Shape:
    """Classify the two steps of `path` around interior position j."""
    if not 1 <= j <= 2 * path.n - 1:
        raise ValueError(f"position j = {j} out of range 1..{2 * path.n - 1}")
    h = path.heights
    if h[j - 1] == h[j + 1]:
        return Shape.UP_WEDGE if h[j] > h[j - 1] else Shape.DOWN_WEDGE
    return Shape.UP_SLOPE if h[j + 1] > h[j - 1] else Shape.DOWN_SLOPE


def wedge_positions(path: DyckPath) -> list[tuple[int, Shape]]:
    """All interior positions carrying a wedge, with their kinds."""
    out = []
    for j in range(1, 2 * path.n):
        shape = local_shape(path, j)
        if shape.is_wedge:
            out.append((j, shape))
    return out


def remove_wedge(path: DyckPath, j: int) -> DyckPath:
    """Drop the wedge at j, yielding the path (h(0),...,h(j-1),h(j+2),...)."""
    shape = local_shape(path, j)
    if not shape.is_wedge:
        raise ValueError(f"position {j} of {path.heights} carries a slope, not a wedge")
    h = path.heights
    return DyckPath(h[:j] + h[j + 2 :])


def insert_wedge(path: DyckPath, j: int, shape: Shape) -> DyckPath:
    """Inverse of remove_wedge: insert a wedge so position j carries `shape`."""
    if not shape.is_wedge:
        raise ValueError("only wedges can be inserted")
    if not 1 <= j <= 2 * path.n + 1:
        raise ValueError(f"insertion position j = {j} out of range")
    h = path.heights
    base = h[j - 1]
    tip = base + 1 if shape is Shape.UP_WEDGE else base - 1
    return DyckPath(h[:j] + (tip, base) + h[j:])


def path_leq(a: DyckPath, b: DyckPath) -> bool:
    """Pointwise partial order: a <= b iff a(j) <= b(j) for all j."""
    if len(a) != len(b):
        raise ValueError(f"paths have different lengths: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a.heights, b.heights))
