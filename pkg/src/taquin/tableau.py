"""Tableaux as chains of shapes, with fillings, words, and rotation.

A tableau over the alphabet 1..k is a chain of k+1 shapes where each
consecutive skew shape is a horizontal strip; entry i fills the boxes of
the ith strip.  Chains are stored canonically (trailing zero rows
dropped), so equality identifies padded copies of the same tableau;
vertical shift questions go through equal_up_to_vshift explicitly.
"""

from dataclasses import dataclass

from .errors import TableauError
from .shapes import (
    Cell,
    StableShape,
    aligned,
    as_shape,
    is_horizontal_strip,
    is_stable_horizontal_strip,
    norm0,
    pad,
    prepend,
    strip_cells,
)


def _canonical(shape):
    return norm0(as_shape(shape))


@dataclass(frozen=True)
class Tableau:
    """A chain of shapes forming horizontal strips."""

    chain: tuple

    def __post_init__(self):
        chain = tuple(_canonical(s) for s in self.chain)
        if not chain:
            raise TableauError("a tableau needs at least one shape in its chain")
        object.__setattr__(self, "chain", chain)
        for a, b in zip(chain, chain[1:]):
            if not is_horizontal_strip(a, b):
                raise TableauError("%r / %r is not a horizontal strip" % (b, a))

    @property
    def inner(self):
        return self.chain[0]

    @property
    def outer(self):
        return self.chain[-1]

    @property
    def alphabet_size(self):
        return len(self.chain) - 1

    def boxes(self):
        return sum(content(self))

    def __repr__(self):
        return "Tableau(%r)" % (self.chain,)


@dataclass(frozen=True)
class StableTableau:
    """A chain of stable shapes forming stable horizontal strips."""

    chain: tuple

    def __post_init__(self):
        chain = tuple(self.chain)
        if not chain:
            raise TableauError("a tableau needs at least one shape in its chain")
        for s in chain:
            if not isinstance(s, StableShape):
                raise TableauError("stable tableaux are chains of stable shapes")
        object.__setattr__(self, "chain", chain)
        for a, b in zip(chain, chain[1:]):
            if not is_stable_horizontal_strip(a, b):
                raise TableauError("%r / %r is not a stable horizontal strip" % (b, a))

    @property
    def inner(self):
        return self.chain[0]

    @property
    def outer(self):
        return self.chain[-1]

    @property
    def alphabet_size(self):
        return len(self.chain) - 1

    def __repr__(self):
        return "StableTableau(%r)" % (self.chain,)


@dataclass(frozen=True, eq=True)
class Filling:
    """Entries placed on the boxes of a skew shape.

    Rows weakly increase left to right, columns strictly increase top to
    bottom, and the filled cells are exactly the boxes of outer/inner.
    """

    cells: dict
    inner: tuple
    outer: tuple

    def __post_init__(self):
        object.__setattr__(self, "inner", _canonical(self.inner))
        object.__setattr__(self, "outer", _canonical(self.outer))
        cells = {Cell(*c): e for c, e in self.cells.items()}
        object.__setattr__(self, "cells", cells)
        if set(cells) != set(strip_cells(self.inner, self.outer)):
            raise TableauError("cells do not match the boxes of %r / %r"
                               % (self.outer, self.inner))
        for c, e in cells.items():
            if not isinstance(e, int) or e < 1:
                raise TableauError("entries must be positive ints: %r" % (e,))
            right = cells.get(Cell(c.row, c.col + 1))
            if right is not None and right < e:
                raise TableauError("row %d decreases at column %d" % (c.row, c.col))
            below = cells.get(Cell(c.row + 1, c.col))
            if below is not None and below <= e:
                raise TableauError("column %d does not increase at row %d"
                                   % (c.col, c.row))


def content(t):
    """Box counts of the successive strips."""
    out = []
    for a, b in zip(t.chain, t.chain[1:]):
        x, y = aligned(a, b)
        out.append(sum(q - p for p, q in zip(x, y)))
    return tuple(out)


def to_filling(t):
    """The entries-on-boxes view of a tableau."""
    cells = {}
    for i, (a, b) in enumerate(zip(t.chain, t.chain[1:]), start=1):
        for c in strip_cells(a, b):
            cells[c] = i
    return Filling(cells, t.inner, t.outer)


def from_filling(f, k=None):
    """The chain view of a filling, over the alphabet 1..k."""
    if k is None:
        k = max(f.cells.values(), default=0)
    if any(e > k for e in f.cells.values()):
        raise TableauError("entry exceeds alphabet size %d" % k)
    depth = max([len(f.inner), len(f.outer)] + [c.row for c in f.cells])
    cur = list(pad(f.inner, depth))
    chain = [tuple(cur)]
    for i in range(1, k + 1):
        level = sorted((c for c, e in f.cells.items() if e == i),
                       key=lambda c: c.col)
        for c in level:
            if cur[c.row - 1] != c.col - 1:
                raise TableauError("entry %d at %r does not extend the shape"
                                   % (i, c))
            cur[c.row - 1] = c.col
        chain.append(tuple(cur))
    return Tableau(tuple(chain))


def standard_renumbering(t):
    """Refine each strip into single boxes, in ascending column order."""
    chain = [t.chain[0]]
    for a, b in zip(t.chain, t.chain[1:]):
        cells = sorted(strip_cells(a, b), key=lambda c: c.col)
        cur = list(aligned(a, b)[0])
        for c in cells:
            cur[c.row - 1] += 1
            chain.append(tuple(cur))
    return Tableau(tuple(chain))


def column_word(t):
    """Entries read bottom to top in each column, columns left to right."""
    cells = to_filling(t).cells
    out = []
    for col in sorted({c.col for c in cells}):
        for row in sorted((c.row for c in cells if c.col == col), reverse=True):
            out.append(cells[Cell(row, col)])
    return tuple(out)


def star(t, k):
    """Rotate 180 degrees in the bounding rectangle and complement entries.

    Entry j becomes k+1-j; the result is normalized to start at row 1,
    column 1.
    """
    f = to_filling(t)
    if not f.cells:
        return Tableau(((),) * (len(t.chain)))
    rows = [c.row for c in f.cells]
    cols = [c.col for c in f.cells]
    rr = min(rows) + max(rows)
    cc = min(cols) + max(cols)
    flipped = {Cell(rr - c.row, cc - c.col): k + 1 - e for c, e in f.cells.items()}
    r0 = min(c.row for c in flipped) - 1
    c0 = min(c.col for c in flipped) - 1
    cells = {Cell(c.row - r0, c.col - c0): e for c, e in flipped.items()}
    nrows = max(c.row for c in cells)
    inner = [None] * nrows
    outer = [None] * nrows
    for r in range(1, nrows + 1):
        cs = sorted(c.col for c in cells if c.row == r)
        if cs:
            if cs != list(range(cs[0], cs[-1] + 1)):
                raise TableauError("rotated cells do not form row intervals")
            inner[r - 1] = cs[0] - 1
            outer[r - 1] = cs[-1]
    nxt = 0
    for r in range(nrows - 1, -1, -1):
        if outer[r] is None:
            inner[r] = outer[r] = nxt
        else:
            nxt = outer[r]
    return from_filling(Filling(cells, tuple(inner), tuple(outer)), k)


def vshift(t, l, count):
    """Stack count rows of length l on top of every shape in the chain."""
    return Tableau(tuple(prepend(s, l, count) for s in t.chain))


def vshift_normalize(t, l):
    """Strip leading rows of length l shared by every shape in the chain."""
    chain = list(t.chain)
    if l <= 0:
        return t
    while all(s and s[0] == l for s in chain):
        chain = [s[1:] for s in chain]
    return Tableau(tuple(chain))


def equal_up_to_vshift(a, b, l):
    """Whether the chains agree after stripping leading rows of length l."""
    if len(a.chain) != len(b.chain):
        return False
    return vshift_normalize(a, l).chain == vshift_normalize(b, l).chain
