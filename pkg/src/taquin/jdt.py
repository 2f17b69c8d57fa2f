"""Jeu de taquin slides, rectification, pairings, and equivalences."""

from bisect import bisect_right
from typing import NamedTuple

from .errors import SearchExhaustedError, ShapeError
from .growth import LocalRule, fill_pair
from .shapes import (Cell, addable_cells, contains, is_horizontal_strip,
                     norm0, pad, removable_cells, size)
from .tableau import Filling, Tableau, content, from_filling, star, to_filling


class SlideTrace(NamedTuple):
    """Successive hole positions of one slide, endpoints included."""

    path: tuple
    start: Cell
    end: Cell


def _adjust(shape, cell, delta):
    rows = list(pad(shape, max(len(shape), cell.row)))
    rows[cell.row - 1] += delta
    return norm0(tuple(rows))


def slide_in(t, b):
    """Slide the hole at an inner corner b outward through the filling.

    The entry right of the hole moves left when strictly smaller than the
    entry below; otherwise the entry below moves up.  Returns the slid
    tableau, the vacated outer cell, and the hole path.
    """
    b = Cell(*b)
    if b not in removable_cells(t.inner):
        raise ShapeError("%r is not an inner corner of %r/%r"
                         % (b, t.outer, t.inner))
    cells = dict(to_filling(t).cells)
    hole = b
    path = [hole]
    while True:
        right = Cell(hole.row, hole.col + 1)
        below = Cell(hole.row + 1, hole.col)
        if right not in cells and below not in cells:
            break
        if right in cells and (below not in cells
                               or cells[right] < cells[below]):
            nxt = right
        else:
            nxt = below
        cells[hole] = cells.pop(nxt)
        hole = nxt
        path.append(hole)
    inner = _adjust(t.inner, b, -1)
    outer = _adjust(t.outer, hole, -1)
    new = from_filling(Filling(cells, inner, outer), t.alphabet_size)
    return new, hole, SlideTrace(tuple(path), b, hole)


def slide_out(t, c):
    """Slide the hole at an outer corner c inward; inverse of slide_in.

    The entry above the hole moves down when the entry left of the hole
    is at most it; otherwise the left entry moves right.
    """
    c = Cell(*c)
    if c not in addable_cells(t.outer):
        raise ShapeError("%r is not an outer corner of %r/%r"
                         % (c, t.outer, t.inner))
    cells = dict(to_filling(t).cells)
    hole = c
    path = [hole]
    while True:
        left = Cell(hole.row, hole.col - 1)
        above = Cell(hole.row - 1, hole.col)
        if left not in cells and above not in cells:
            break
        if above in cells and (left not in cells
                               or cells[left] <= cells[above]):
            nxt = above
        else:
            nxt = left
        cells[hole] = cells.pop(nxt)
        hole = nxt
        path.append(hole)
    outer = _adjust(t.outer, c, 1)
    inner = _adjust(t.inner, hole, 1)
    new = from_filling(Filling(cells, inner, outer), t.alphabet_size)
    return new, hole, SlideTrace(tuple(path), c, hole)


def rectify(t, pick=None):
    """Slide inward repeatedly until the inner shape is empty."""
    cur = t
    while cur.inner:
        corners = sorted(removable_cells(cur.inner))
        cell = corners[0] if pick is None else pick(corners)
        cur, _, _ = slide_in(cur, cell)
    return cur


def jdt_pair(p, q):
    """Exchange an extension pair of tableaux through a switching fill."""
    _, t, u = fill_pair(p, q, LocalRule("J"))
    return t, u


def p_symbol(w):
    """Row-insert a word left to right into a partition-shaped tableau."""
    rows = []
    for x in w:
        cur = x
        for row in rows:
            i = bisect_right(row, cur)
            if i == len(row):
                row.append(cur)
                cur = None
                break
            row[i], cur = cur, row[i]
        if cur is not None:
            rows.append([cur])
    k = max((x for row in rows for x in row), default=0)
    chain = [()]
    for v in range(1, k + 1):
        chain.append(norm0(tuple(sum(1 for e in row if e <= v)
                                 for row in rows)))
    return Tableau(tuple(chain))


def knuth_equivalent(a, b):
    """Whether two tableaux share a rectification."""
    return rectify(a) == rectify(b)


def dual_equivalent(a, b, depth=None):
    """Whether all slide sequences up to a depth give equal shape traces.

    Outward slides stay inside the starting bounding rectangle plus two
    rows and columns; visited tableau pairs are memoized.
    """
    if a.inner != b.inner or a.outer != b.outer:
        return False
    if depth is None:
        depth = 2 * a.boxes()
    wr = len(a.outer) + 2
    wc = (a.outer[0] if a.outer else 0) + 2
    seen = set()
    stack = [(a, b, 0)]
    while stack:
        x, y, d = stack.pop()
        key = (x.chain, y.chain)
        if key in seen or d >= depth:
            continue
        seen.add(key)
        moves = [("in", c) for c in removable_cells(x.inner)]
        moves += [("out", c) for c in addable_cells(x.outer)
                  if c.row <= wr and c.col <= wc]
        for kind, cell in moves:
            if kind == "in":
                nx, _, _ = slide_in(x, cell)
                ny, _, _ = slide_in(y, cell)
            else:
                nx, _, _ = slide_out(x, cell)
                ny, _, _ = slide_out(y, cell)
            if nx.inner != ny.inner or nx.outer != ny.outer:
                return False
            stack.append((nx, ny, d + 1))
    return True


def _strips_between(base, bound, k):
    """Shapes one horizontal strip of k boxes above base, inside bound."""
    n = max(len(base), len(bound))
    lo = pad(base, n)
    hi = pad(bound, n)

    out = []

    def rec(r, acc, left):
        if r == n:
            if left == 0:
                out.append(norm0(tuple(acc)))
            return
        top = min(hi[r], acc[r - 1] if r > 0 else hi[r], lo[r] + left)
        cap = lo[r - 1] if r > 0 else top
        top = min(top, cap)
        for v in range(lo[r], top + 1):
            acc.append(v)
            rec(r + 1, acc, left - (v - lo[r]))
            acc.pop()

    rec(0, [], k)
    return out


def tableaux_between(inner, outer, cont):
    """All tableaux of shape outer/inner with the given content."""
    inner, outer = norm0(inner), norm0(outer)
    if not contains(inner, outer):
        raise ShapeError("%r does not contain %r" % (outer, inner))
    if sum(cont) != size(outer) - size(inner):
        return []

    out = []

    def rec(chain, idx):
        if idx == len(cont):
            out.append(Tableau(tuple(chain)))
            return
        for nxt in _strips_between(chain[-1], outer, cont[idx]):
            if is_horizontal_strip(chain[-1], nxt):
                chain.append(nxt)
                rec(chain, idx + 1)
                chain.pop()

    rec([inner], 0)
    return out


def standard_tableaux(inner, outer):
    """All standard fillings of a skew shape."""
    n = size(norm0(outer)) - size(norm0(inner))
    return tableaux_between(inner, outer, (1,) * n)


def reversal(t, k):
    """The tableau of t's shape dual-equivalent to t and Knuth-equivalent
    to its rotation, unique by Haiman's theorem."""
    target = star(t, k)
    witness = None
    for cand in tableaux_between(t.inner, t.outer, content(target)):
        if not knuth_equivalent(cand, target):
            continue
        if not dual_equivalent(cand, t):
            continue
        if witness is not None:
            raise SearchExhaustedError("multiple reversal witnesses for %r"
                                       % (t,))
        witness = cand
    if witness is None:
        raise SearchExhaustedError("no reversal witness for %r" % (t,))
    return witness
