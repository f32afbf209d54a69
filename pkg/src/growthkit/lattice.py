"""Ambient posets (quadrant/octant), shapes as finite order ideals, and cover structure.

Points use English orientation: ``row`` counts from the top, ``col`` from the
left, both 1-based.  A quadrant shape is a partition (weakly decreasing row
lengths); an octant shape is a strict partition whose row ``k`` occupies
columns ``k .. k + length - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Point:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise LatticeError(f"point coordinates must be >= 1, got {self}")

    @property
    def diagonal(self) -> bool:
        return self.row == self.col

    def transpose(self) -> "Point":
        return Point(self.col, self.row)

    def __str__(self):
        return f"({self.row},{self.col})"


class Geometry(Enum):
    QUADRANT = "quadrant"
    OCTANT = "octant"

    def contains(self, p: Point) -> bool:
        if self is Geometry.QUADRANT:
            return True
        return p.row <= p.col

    def lower_covers(self, p: Point) -> list[Point]:
        """Points covered by p in the ambient order."""
        out = []
        if p.row > 1:
            q = Point(p.row - 1, p.col)
            if self.contains(q):
                out.append(q)
        if p.col > 1:
            q = Point(p.row, p.col - 1)
            if self.contains(q):
                out.append(q)
        return out

    def upper_covers(self, p: Point) -> list[Point]:
        """Points covering p in the ambient order."""
        return [q for q in (Point(p.row + 1, p.col), Point(p.row, p.col + 1))
                if self.contains(q)]

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Shape:
    """A finite order ideal of the geometry, stored by row lengths."""

    geometry: Geometry
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if any(r < 1 for r in self.rows):
            raise LatticeError(f"row lengths must be positive: {self.rows}")
        if self.geometry is Geometry.QUADRANT:
            if any(a < b for a, b in zip(self.rows, self.rows[1:])):
                raise LatticeError(f"quadrant rows must weakly decrease: {self.rows}")
        else:
            if any(a <= b for a, b in zip(self.rows, self.rows[1:])):
                raise LatticeError(f"octant rows must strictly decrease: {self.rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    def row_start(self, r: int) -> int:
        """First occupied column of 1-based row r."""
        return r if self.geometry is Geometry.OCTANT else 1

    def row_end(self, r: int) -> int:
        """Last occupied column of 1-based row r."""
        return self.row_start(r) + self.rows[r - 1] - 1

    def contains(self, p: Point) -> bool:
        if p.row > len(self.rows):
            return False
        return self.row_start(p.row) <= p.col <= self.row_end(p.row)

    def boxes(self) -> list[Point]:
        """Derived box-set view, row by row."""
        return [Point(r, c)
                for r in range(1, len(self.rows) + 1)
                for c in range(self.row_start(r), self.row_end(r) + 1)]

    def leq(self, other: "Shape") -> bool:
        """Containment of order ideals."""
        if len(self.rows) > len(other.rows):
            return False
        return all(a <= b for a, b in zip(self.rows, other.rows))

    def covers(self, other: "Shape") -> bool:
        """True when self = other plus exactly one box."""
        return other.leq(self) and self.size == other.size + 1

    def __str__(self):
        return format_shape(self)


def empty_shape(geometry: Geometry) -> Shape:
    return Shape(geometry, ())


def shape_size(s: Shape) -> int:
    """Number of boxes; the grading of the lattice of shapes."""
    return s.size


def deletion_points(s: Shape) -> list[Point]:
    """Maximal boxes of s, ordered northeast to southwest."""
    pts = []
    k = len(s.rows)
    for r in range(1, k + 1):
        if r == k or s.row_end(r) > s.row_end(r + 1):
            pts.append(Point(r, s.row_end(r)))
    return sorted(pts, key=_ne_to_sw)


def insertion_points(s: Shape) -> list[Point]:
    """Minimal points of the complement of s, ordered northeast to southwest."""
    k = len(s.rows)
    if k == 0:
        return [Point(1, 1)]
    pts = [Point(1, s.row_end(1) + 1)]
    for r in range(2, k + 1):
        if s.row_end(r - 1) > s.row_end(r):
            pts.append(Point(r, s.row_end(r) + 1))
    if s.geometry is Geometry.QUADRANT:
        pts.append(Point(k + 1, 1))
    elif s.rows[-1] >= 2:
        pts.append(Point(k + 1, k + 1))
    return sorted(pts, key=_ne_to_sw)


def _ne_to_sw(p: Point):
    return (-p.col, p.row)


def alternation(s: Shape) -> list[tuple[str, Point]]:
    """Insertion ("+") and deletion ("-") points merged northeast to southwest."""
    pts = [("+", p) for p in insertion_points(s)] + [("-", p) for p in deletion_points(s)]
    return sorted(pts, key=lambda kp: _ne_to_sw(kp[1]))


def add_box(s: Shape, p: Point) -> Shape:
    if p not in insertion_points(s):
        raise LatticeError(f"{p} is not an insertion point of {s}")
    if p.row == len(s.rows) + 1:
        return Shape(s.geometry, s.rows + (1,))
    rows = list(s.rows)
    rows[p.row - 1] += 1
    return Shape(s.geometry, rows)


def remove_box(s: Shape, p: Point) -> Shape:
    if p not in deletion_points(s):
        raise LatticeError(f"{p} is not a deletion point of {s}")
    rows = list(s.rows)
    rows[p.row - 1] -= 1
    if rows[p.row - 1] == 0:
        rows.pop()
    return Shape(s.geometry, rows)


def added_box(lower: Shape, upper: Shape) -> Point:
    """The single box of a cover upper = lower + box."""
    if not upper.covers(lower):
        raise LatticeError(f"{upper} does not cover {lower}")
    for r in range(1, len(upper.rows) + 1):
        old = lower.rows[r - 1] if r <= len(lower.rows) else 0
        if upper.rows[r - 1] != old:
            return Point(r, upper.row_end(r))
    raise AssertionError("cover without a differing row")


def join(a: Shape, b: Shape) -> Shape:
    """Least upper bound: rowwise maximum (union of ideals)."""
    if a.geometry is not b.geometry:
        raise LatticeError("cannot join shapes from different geometries")
    n = max(len(a.rows), len(b.rows))
    pad = lambda s: s.rows + (0,) * (n - len(s.rows))
    return Shape(a.geometry, [max(x, y) for x, y in zip(pad(a), pad(b))])


def meet(a: Shape, b: Shape) -> Shape:
    """Greatest lower bound: rowwise minimum (intersection of ideals)."""
    if a.geometry is not b.geometry:
        raise LatticeError("cannot meet shapes from different geometries")
    rows = [min(x, y) for x, y in zip(a.rows, b.rows)]
    return Shape(a.geometry, rows)


def transpose(s: Shape) -> Shape:
    """Conjugate partition; quadrant shapes only."""
    if s.geometry is not Geometry.QUADRANT:
        raise LatticeError("transpose is only defined on quadrant shapes")
    if not s.rows:
        return s
    out = [0] * s.rows[0]
    for length in s.rows:
        for c in range(length):
            out[c] += 1
    return Shape(s.geometry, out)


@cache
def shapes_of_size(geometry: Geometry, n: int) -> tuple[Shape, ...]:
    """All shapes with exactly n boxes."""
    if n == 0:
        return (empty_shape(geometry),)
    found = []
    strict = geometry is Geometry.OCTANT

    def extend(prefix, remaining, maxpart):
        if remaining == 0:
            found.append(Shape(geometry, prefix))
            return
        cap = min(remaining, maxpart)
        for part in range(cap, 0, -1):
            extend(prefix + [part], remaining - part,
                   part - 1 if strict else part)

    extend([], n, n)
    return tuple(found)


def shapes_up_to(geometry: Geometry, max_size: int):
    for n in range(max_size + 1):
        yield from shapes_of_size(geometry, n)


def format_shape(s: Shape) -> str:
    """Comma-separated part list; the empty shape is "0"."""
    if not s.rows:
        return "0"
    return ",".join(str(r) for r in s.rows)


def parse_shape(text: str, geometry: Geometry) -> Shape:
    text = text.strip()
    if text in ("", "0"):
        return empty_shape(geometry)
    try:
        rows = [int(t) for t in text.split(",")]
    except ValueError:
        raise LatticeError(f"malformed shape {text!r}") from None
    return Shape(geometry, rows)
