"""Shapes: weakly decreasing integer row lengths, plus stable shapes.

A shape is a tuple of ints, weakly decreasing from the top row down.  When
every part is nonnegative the tuple behaves like a partition and trailing
zeros carry no information.  Shapes with a negative part keep their
explicit length, because zero padding would break monotonicity; callers
compare those at equal lengths.

A stable shape has some number of infinite rows on top, then a finite
window, then infinitely many empty rows below.  Empty means minus
infinity: a row of length 0 still ends at column 0 and is not empty.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ShapeError

INF = float("inf")
NEG_INF = float("-inf")


class Cell(NamedTuple):
    """A box position, 1-indexed rows; columns may be nonpositive."""

    row: int
    col: int


def cross_less(c, d):
    """Strictly above and weakly right: c.col >= d.col and c.row < d.row."""
    return c.col >= d.col and c.row < d.row


def as_shape(parts):
    """Validate a row length sequence and return it as a tuple."""
    out = tuple(parts)
    for p in out:
        if not isinstance(p, int):
            raise ShapeError("row lengths must be ints: %r" % (p,))
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ShapeError("row lengths must be weakly decreasing: %r" % (out,))
    return out


def norm0(shape):
    """Drop trailing zero rows."""
    n = len(shape)
    while n > 0 and shape[n - 1] == 0:
        n -= 1
    return tuple(shape[:n])


def pad(shape, length):
    """Extend with zero rows up to the given length."""
    if len(shape) >= length:
        return tuple(shape)
    if shape and shape[-1] < 0:
        raise ShapeError("cannot zero pad a shape with negative rows: %r" % (shape,))
    return tuple(shape) + (0,) * (length - len(shape))


def aligned(a, b):
    """Bring two shapes to a common length."""
    if len(a) == len(b):
        return tuple(a), tuple(b)
    n = max(len(a), len(b))
    return pad(a, n), pad(b, n)


def size(shape):
    return sum(shape)


def contains(a, b):
    """Whether a fits inside b, row by row.

    Stable shapes compare along their full row sequences.
    """
    if isinstance(a, StableShape) or isinstance(b, StableShape):
        last = max(a.depth, b.depth) + 1
        return all(a.part(r) <= b.part(r) for r in range(1, last + 1))
    x, y = aligned(a, b)
    return all(p <= q for p, q in zip(x, y))


def is_horizontal_strip(inner, outer):
    """Whether outer/inner is a skew shape with at most one box per column."""
    i, o = aligned(inner, outer)
    if any(x < y for x, y in zip(o, i)):
        return False
    return all(i[r] >= o[r + 1] for r in range(len(o) - 1))


def join(a, b):
    """Rowwise maximum."""
    x, y = aligned(a, b)
    return tuple(max(p, q) for p, q in zip(x, y))


def meet(a, b):
    """Rowwise minimum."""
    x, y = aligned(a, b)
    return tuple(min(p, q) for p, q in zip(x, y))


def covers(a, b):
    """Whether b is a plus exactly one box."""
    x, y = aligned(a, b)
    return all(p <= q for p, q in zip(x, y)) and size(y) - size(x) == 1


def cover_cell(a, b):
    """The unique box of b/a when b covers a."""
    x, y = aligned(a, b)
    diff = [r for r in range(len(x)) if x[r] != y[r]]
    if len(diff) != 1 or y[diff[0]] - x[diff[0]] != 1:
        raise ShapeError("%r does not cover %r" % (b, a))
    r = diff[0]
    return Cell(r + 1, y[r])


def strip_cells(inner, outer):
    """Boxes of outer/inner as cells, top row first, left to right."""
    i, o = aligned(inner, outer)
    out = []
    for r in range(len(o)):
        if o[r] < i[r]:
            raise ShapeError("%r does not contain %r" % (outer, inner))
        out.extend(Cell(r + 1, c) for c in range(i[r] + 1, o[r] + 1))
    return out


def strip_columns(inner, outer):
    """Columns occupied by the horizontal strip outer/inner, ascending."""
    if not is_horizontal_strip(inner, outer):
        raise ShapeError("%r / %r is not a horizontal strip" % (outer, inner))
    return sorted(c.col for c in strip_cells(inner, outer))


def add_box(shape, row):
    """Add one box at the end of the given 1-indexed row."""
    s = list(shape)
    if row == len(s) + 1 and (not s or s[-1] >= 0):
        s.append(0)
    if not 1 <= row <= len(s):
        raise ShapeError("no row %d in %r" % (row, shape))
    s[row - 1] += 1
    return as_shape(s)


def remove_box(shape, row):
    """Remove the last box of the given 1-indexed row."""
    s = list(shape)
    if not 1 <= row <= len(s):
        raise ShapeError("no row %d in %r" % (row, shape))
    s[row - 1] -= 1
    return as_shape(s)


def add_box_in_column(shape, col):
    """Add one box in the given column, in the topmost row that ends just
    left of it."""
    s = list(shape)
    if col - 1 not in s and col == 1 and (not s or s[-1] >= 1):
        s.append(0)
    for r, p in enumerate(s):
        if p == col - 1:
            s[r] += 1
            return tuple(s)
    raise ShapeError("no row of %r ends at column %d" % (shape, col - 1))


def remove_box_in_column(shape, col):
    """Remove the box in the given column from the bottommost row that ends
    there."""
    s = list(shape)
    for r in range(len(s) - 1, -1, -1):
        if s[r] == col:
            s[r] -= 1
            return tuple(s)
    raise ShapeError("no row of %r ends at column %d" % (shape, col))


def addable_cells(shape):
    """Cells that can be added keeping rows weakly decreasing, top first.

    Only meaningful for nonnegative shapes.
    """
    s = norm0(shape)
    out = []
    for r in range(len(s)):
        if r == 0 or s[r] < s[r - 1]:
            out.append(Cell(r + 1, s[r] + 1))
    out.append(Cell(len(s) + 1, 1))
    return out


def removable_cells(shape):
    """Corner cells whose removal keeps rows weakly decreasing, top first."""
    s = norm0(shape)
    out = []
    for r in range(len(s)):
        below = s[r + 1] if r + 1 < len(s) else 0
        if s[r] > below:
            out.append(Cell(r + 1, s[r]))
    return out


@dataclass(frozen=True)
class SkewShape:
    """The boxes of outer not in inner."""

    inner: tuple
    outer: tuple

    def __post_init__(self):
        object.__setattr__(self, "inner", as_shape(self.inner))
        object.__setattr__(self, "outer", as_shape(self.outer))
        if not contains(self.inner, self.outer):
            raise ShapeError("%r does not contain %r" % (self.outer, self.inner))

    def cells(self):
        return strip_cells(self.inner, self.outer)

    def size(self):
        return size(self.outer) - size(self.inner)


def inner_corners(s):
    """Cells whose removal from the inner shape keeps it a shape."""
    return set(removable_cells(s.inner))


def outer_corners(s):
    """Cells whose addition to the outer shape keeps it a shape."""
    return set(addable_cells(s.outer))


def conjugate(shape):
    """Transpose a nonnegative shape."""
    s = norm0(shape)
    if s and s[-1] < 0:
        raise ShapeError("cannot transpose a shape with negative rows: %r" % (shape,))
    if not s:
        return ()
    return tuple(sum(1 for p in s if p >= c) for c in range(1, s[0] + 1))


def prepend(shape, value, count):
    """Stack count rows of the given length on top of a shape.

    An infinite value turns a finite shape into a stable one.
    """
    if count < 0:
        raise ShapeError("row count must be nonnegative")
    if value == INF:
        if isinstance(shape, StableShape):
            return StableShape(shape.ninf + count, shape.parts)
        return StableShape(count, as_shape(shape))
    return as_shape((value,) * count + tuple(shape))


@dataclass(frozen=True)
class StableShape:
    """ninf infinite rows, then a finite window, then empty rows forever."""

    ninf: int
    parts: tuple

    def __post_init__(self):
        if not isinstance(self.ninf, int) or self.ninf < 0:
            raise ShapeError("infinite row count must be a nonnegative int")
        object.__setattr__(self, "parts", as_shape(self.parts))

    @classmethod
    def from_rows(cls, rows):
        """Canonicalize a full row listing with explicit inf / -inf parts."""
        rows = list(rows)
        while rows and rows[-1] == NEG_INF:
            rows.pop()
        ninf = 0
        while ninf < len(rows) and rows[ninf] == INF:
            ninf += 1
        window = rows[ninf:]
        if any(p in (INF, NEG_INF) for p in window):
            raise ShapeError("infinite rows must be a prefix, empty rows a suffix")
        return cls(ninf, tuple(int(p) for p in window))

    def part(self, row):
        """Row length at a 1-indexed row; inf above the window, -inf below."""
        if row < 1:
            raise ShapeError("rows are 1-indexed")
        if row <= self.ninf:
            return INF
        if row <= self.ninf + len(self.parts):
            return self.parts[row - self.ninf - 1]
        return NEG_INF

    @property
    def depth(self):
        """Last row that is not empty."""
        return self.ninf + len(self.parts)

    def __repr__(self):
        return "StableShape(%d, %r)" % (self.ninf, self.parts)


def is_stable_horizontal_strip(inner, outer):
    """Whether outer adds one infinite row to inner and at most one box in
    any column below.

    The windows must line up: outer's window is inner's shifted down one
    row, with the usual horizontal strip interleaving between them.
    """
    if outer.ninf != inner.ninf + 1:
        return False
    a, b = inner.parts, outer.parts
    if len(a) != len(b):
        return False
    if any(a[i] < b[i] for i in range(len(a))):
        return False
    return all(b[i] >= a[i + 1] for i in range(len(a) - 1))
