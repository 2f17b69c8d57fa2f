"""Rectification games on skew tableaux.

Internal row and column insertion move one cocorner entry at a time;
played to exhaustion they rectify a tableau without leaving its Knuth
class.  Row extraction peels off the rows of the rectification with a
travelling strip of stars, and column extraction rebuilds its columns by
sliding an empty box along committed chains of entries.  A differential
driver runs every rectifier on the same input and reports disagreements.

Set DEBUG_MOVES to assert, after every single move, that the move kept
the rectification unchanged.
"""

from typing import NamedTuple

from .errors import ParameterError, ShapeError, TableauError
from .hopscotch import tesler_rectify
from .jdt import SlideTrace, rectify
from .shapes import (
    Cell,
    add_box,
    as_shape,
    cross_less,
    norm0,
    pad,
    remove_box,
    removable_cells,
    strip_cells,
)
from .tableau import Filling, Tableau, from_filling, standard_renumbering, to_filling

DEBUG_MOVES = False


def _is_cocorner(cells, c):
    return (c in cells
            and Cell(c.row - 1, c.col) not in cells
            and Cell(c.row, c.col - 1) not in cells)


def cocorners(p):
    """Entries with no neighbour to the left or above, in reading order."""
    return [c for c in sorted(p.cells) if _is_cocorner(p.cells, c)]


def filling_from_cells(cells):
    """Wrap an entry dict in the skew shape its rows trace out."""
    if not cells:
        return Filling({}, (), ())
    cells = {Cell(*c): e for c, e in cells.items()}
    nrows = max(c.row for c in cells)
    inner = [None] * nrows
    outer = [None] * nrows
    for r in range(1, nrows + 1):
        cs = sorted(c.col for c in cells if c.row == r)
        if cs:
            inner[r - 1] = cs[0] - 1
            outer[r - 1] = cs[-1]
    nxt = 0
    for r in range(nrows - 1, -1, -1):
        if outer[r] is None:
            inner[r] = outer[r] = nxt
        else:
            nxt = outer[r]
    return Filling(cells, tuple(inner), tuple(outer))


def _same_class(a, b):
    if not a.cells or not b.cells:
        return bool(a.cells) == bool(b.cells)
    return rectify(from_filling(a)) == rectify(from_filling(b))


def internal_row_insert(p, c):
    """Remove the entry at a cocorner and row insert it into the rows below.

    The entry bumps the leftmost strictly greater entry of each row it
    visits and comes to rest at the end of the first row without one.
    """
    c = Cell(*c)
    if not _is_cocorner(p.cells, c):
        raise TableauError("%r is not a cocorner" % (c,))
    cells = dict(p.cells)
    x = cells.pop(c)
    inner = add_box(p.inner, c.row)
    outer = p.outer
    r = c.row
    while True:
        r += 1
        row = sorted(d for d in cells if d.row == r)
        bump = next((d for d in row if cells[d] > x), None)
        if bump is None:
            cells[Cell(r, pad(outer, r)[r - 1] + 1)] = x
            outer = add_box(outer, r)
            break
        cells[bump], x = x, cells[bump]
    out = Filling(cells, inner, outer)
    if DEBUG_MOVES:
        assert _same_class(p, out)
    return out


def internal_column_insert(p, c):
    """Remove the entry at a cocorner and column insert it to the right.

    The entry bumps the topmost entry at least as large in each column it
    visits and comes to rest at the bottom of the first column without one.
    """
    c = Cell(*c)
    if not _is_cocorner(p.cells, c):
        raise TableauError("%r is not a cocorner" % (c,))
    cells = dict(p.cells)
    x = cells.pop(c)
    inner = add_box(p.inner, c.row)
    outer = p.outer
    col = c.col
    while True:
        col += 1
        column = sorted(d for d in cells if d.col == col)
        bump = next((d for d in column if cells[d] >= x), None)
        if bump is None:
            if column:
                row = column[-1].row + 1
            else:
                row = sum(1 for q in inner if q >= col) + 1
            cells[Cell(row, col)] = x
            outer = add_box(outer, row)
            break
        cells[bump], x = x, cells[bump]
    out = Filling(cells, inner, outer)
    if DEBUG_MOVES:
        assert _same_class(p, out)
    return out


def row_insertion_game(p, j=None, pick=None, k=None):
    """Row insert cocorners above row j until none remain.

    The inner border may not reach row j.  The surviving entries form a
    partition shape in rows j and below; the result is returned shifted
    back to row 1, and equals the rectification whatever order the
    cocorners were picked in.
    """
    inner = norm0(p.inner)
    if j is None:
        j = len(inner) + 1
    if len(inner) >= j:
        raise ParameterError("inner border reaches row %d" % j)
    cur = p
    while True:
        cand = [c for c in cocorners(cur) if c.row < j]
        if not cand:
            break
        cur = internal_row_insert(cur, cand[0] if pick is None else pick(cand))
    cells = {Cell(c.row - j + 1, c.col): e for c, e in cur.cells.items()}
    return from_filling(filling_from_cells(cells), k)


def column_insertion_game(p, pick=None, k=None):
    """Column insert cocorners in the inner border's columns until none remain.

    The surviving entries form a partition shape right of column mu_1;
    the result is returned shifted back to column 1 and equals the
    rectification.
    """
    m = p.inner[0] if p.inner else 0
    cur = p
    while True:
        cand = sorted((c for c in cocorners(cur) if c.col <= m),
                      key=lambda c: (c.col, c.row))
        if not cand:
            break
        cur = internal_column_insert(cur, cand[0] if pick is None else pick(cand))
    cells = {Cell(c.row, c.col - m): e for c, e in cur.cells.items()}
    return from_filling(filling_from_cells(cells), k)


class ExtractionState(NamedTuple):
    """Mid-extraction snapshot: live entries, star cells, removed entries.

    The entries alone need not trace out a skew shape while stars sit
    between them; entries and stars together always cover exactly the
    region the pass started from.
    """

    entries: dict
    stars: frozenset
    removed: tuple


def _check_stars(stars):
    cols = {}
    for s in stars:
        if s.col in cols:
            raise TableauError("two stars in column %d" % s.col)
        cols[s.col] = s.row
    rows = [cols[c] for c in sorted(cols)]
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise TableauError("stars do not form a horizontal strip")


def _check_region(cellset):
    if not cellset:
        return
    by_row = {}
    for c in cellset:
        by_row.setdefault(c.row, []).append(c.col)
    inner, outer = [], []
    for r in range(1, max(by_row) + 1):
        cs = sorted(by_row.get(r, ()))
        if cs and cs != list(range(cs[0], cs[-1] + 1)):
            raise TableauError("row %d of the region has gaps" % r)
        inner.append(cs[0] - 1 if cs else None)
        outer.append(cs[-1] if cs else None)
    nxt = 0
    for r in range(len(outer) - 1, -1, -1):
        if outer[r] is None:
            inner[r] = outer[r] = nxt
        else:
            nxt = outer[r]
    as_shape(inner)
    as_shape(outer)


def _extraction_state(cells, stars, removed):
    _check_stars(stars)
    _check_region(set(cells) | stars)
    return ExtractionState(dict(cells), frozenset(stars), tuple(removed))


def row_extract(p):
    """One extraction pass: drive a strip of stars through the tableau.

    Strips are processed in entry order, left to right.  Each entry swaps
    with the maximal star below it in the cross order; with no such star
    the entry leaves the tableau and its cell becomes a star.  Ties
    between incomparable stars go to the lowest then leftmost one.
    Returns the surviving tableau and the multiset of removed entries.
    """
    f = to_filling(p)
    cells = dict(f.cells)
    stars = set()
    removed = []
    for i in range(1, p.alphabet_size + 1):
        for c in sorted((d for d, e in cells.items() if e == i),
                        key=lambda d: d.col):
            cand = [s for s in stars if cross_less(s, c)]
            if cand:
                s = max(cand, key=lambda d: (d.row, -d.col))
                cells[s] = i
                del cells[c]
                stars.discard(s)
            else:
                removed.append(i)
                del cells[c]
            stars.add(c)
        _extraction_state(cells, stars, removed)
    depth = max([len(f.outer)] + [s.row for s in stars])
    nu = list(pad(f.outer, depth))
    for s in stars:
        nu[s.row - 1] = min(nu[s.row - 1], s.col - 1)
    nu = norm0(tuple(nu))
    if set(strip_cells(nu, f.outer)) != stars:
        raise TableauError("stars did not end on the outer border")
    out = from_filling(Filling(cells, f.inner, nu), p.alphabet_size)
    return out, tuple(removed)


def row_extraction_rectify(p):
    """Extract rows until the tableau is empty; pass i gives row i."""
    k = p.alphabet_size
    cur, rows = p, []
    for _ in range(k):
        if not cur.boxes():
            break
        cur, rem = row_extract(cur)
        rows.append(rem)
    if cur.boxes():
        raise TableauError("extraction left entries after %d passes" % k)
    cells = {Cell(i, j): e for i, rem in enumerate(rows, start=1)
             for j, e in enumerate(sorted(rem), start=1)}
    return from_filling(Filling(cells, (), tuple(len(r) for r in rows)), k)


def column_slide(p, b, k):
    """Slide the inner corner b through a committed chain labelled 1..k.

    The permissibility search walks cells in reading order and commits to
    the first increasing cross-order chain of entries 1, 2, ..., k beyond
    b whose switches leave a valid tableau; the box takes each label's
    place in turn and the last cell is vacated.  Returns the slid filling
    with the trace of box positions, or None when no chain works.
    """
    b = Cell(*b)
    if b not in removable_cells(p.inner):
        raise TableauError("%r is not an inner corner of %r" % (b, p.inner))
    if any(e > k for e in p.cells.values()):
        raise ParameterError("entries exceed the alphabet 1..%d" % k)
    by_value = {}
    for c, e in p.cells.items():
        by_value.setdefault(e, []).append(c)
    for cs in by_value.values():
        cs.sort()

    def search(prev, v, acc):
        if v > k:
            res = _slide_apply(p, b, acc)
            return None if res is None else (res, acc)
        for c in by_value.get(v, ()):
            if cross_less(prev, c):
                hit = search(c, v + 1, acc + (c,))
                if hit:
                    return hit
        return None

    hit = search(b, 1, ())
    if hit is None:
        return None
    res, chain = hit
    if DEBUG_MOVES:
        assert _same_class(p, res)
    return res, SlideTrace((b,) + chain, b, chain[-1])


def _slide_apply(p, b, chain):
    cells = dict(p.cells)
    vals = [cells[c] for c in chain]
    del cells[chain[-1]]
    for t, v in zip((b,) + chain[:-1], vals):
        cells[t] = v
    try:
        return Filling(cells, remove_box(p.inner, b.row),
                       remove_box(p.outer, chain[-1].row))
    except (ShapeError, TableauError):
        return None


def column_extract(p, k):
    """Shear one column off: prepend a full column, slide, delete.

    A full column 1..k goes just left of the first column, starting in
    its first row; the box above the rightmost column slides in, one row
    higher each time, until that column is full, and the full column is
    deleted.  Inputs whose shape gives the slides no room fall back to
    column inserting the first column's entries one by one, which has the
    same effect on the Knuth class.
    """
    if not p.cells:
        return p
    if any(e > k for e in p.cells.values()):
        raise ParameterError("entries exceed the alphabet 1..%d" % k)
    try:
        out = _extract_by_slides(p, k)
    except (ShapeError, TableauError):
        out = _first_column_pass(p)
    if DEBUG_MOVES:
        assert _same_class(p, out)
    return out


def _extract_by_slides(p, k):
    cells = dict(p.cells)
    left = min(c.col for c in cells)
    if left == 1:
        cells = {Cell(c.row, c.col + 1): e for c, e in cells.items()}
        left = 2
    s = min(c.row for c in cells if c.col == left)
    for i in range(k):
        cells[Cell(s + i, left - 1)] = i + 1
    cur = filling_from_cells(cells)
    for _ in range(k):
        rc = max(c.col for c in cur.cells)
        col = [c for c in cur.cells if c.col == rc]
        if len(col) == k:
            break
        top = min(c.row for c in col)
        if top == 1:
            raise TableauError("no room above the rightmost column")
        hit = column_slide(cur, Cell(top - 1, rc), k)
        if hit is None:
            raise TableauError("no permissible slide above the rightmost column")
        cur = hit[0]
    rc = max(c.col for c in cur.cells)
    if sum(1 for c in cur.cells if c.col == rc) != k:
        raise TableauError("the rightmost column did not fill")
    return filling_from_cells({c: e for c, e in cur.cells.items()
                               if c.col != rc})


def _first_column_pass(p):
    left = min(c.col for c in p.cells)
    cur = p
    for c in sorted(c for c in p.cells if c.col == left):
        cur = internal_column_insert(cur, c)
    return cur


def is_straight(f):
    """Whether the entries, anchored at row and column 1, fill a partition."""
    if not f.cells:
        return True
    r0 = min(c.row for c in f.cells) - 1
    c0 = min(c.col for c in f.cells) - 1
    cells = {Cell(c.row - r0, c.col - c0): e for c, e in f.cells.items()}
    try:
        return not filling_from_cells(cells).inner
    except (ShapeError, TableauError):
        return False


def _normalize(f, k):
    if not f.cells:
        return from_filling(f, k)
    r0 = min(c.row for c in f.cells) - 1
    c0 = min(c.col for c in f.cells) - 1
    out = filling_from_cells({Cell(c.row - r0, c.col - c0): e
                              for c, e in f.cells.items()})
    if out.inner:
        raise TableauError("extraction did not reach a straight shape")
    return from_filling(out, k)


def column_extraction_rectify(p, k):
    """Extract columns until straight: one pass per column starting high.

    The pass count is the number of columns beginning in rows above the
    top of the first column; extra passes run only if the result is still
    not straight.
    """
    cur = p
    if cur.cells:
        tops = {}
        for c in cur.cells:
            tops[c.col] = min(tops.get(c.col, c.row), c.row)
        first = tops[min(tops)]
        j = sum(1 for r in tops.values() if r < first)
        for _ in range(j):
            cur = column_extract(cur, k)
        guard = len(tops) + 2
        while cur.cells and not is_straight(cur) and guard:
            cur = column_extract(cur, k)
            guard -= 1
    return _normalize(cur, k)


class RectifyReport(NamedTuple):
    """Outcome of running every rectifier on one tableau."""

    agree: bool
    results: tuple
    minimal: object


def _all_rectifications(t):
    k = t.alphabet_size
    f = to_filling(t)
    return (
        ("jdt", rectify(t)),
        ("row game", row_insertion_game(f, k=k)),
        ("column game", column_insertion_game(f, k=k)),
        ("row extraction", row_extraction_rectify(t)),
        ("column extraction", column_extraction_rectify(f, k)),
    )


def _agreement(t):
    results = _all_rectifications(t)
    base = results[0][1]
    shifted = tesler_rectify(standard_renumbering(t))
    ribbon = standard_renumbering(base)
    return all(r == base for _, r in results[1:]) and shifted == ribbon, results, shifted


def rectify_differential(t):
    """Run all six rectifiers on t and report whether they agree.

    On disagreement the report carries the smallest disagreeing
    consecutive subchain of t as a shrunken counterexample.
    """
    agree, results, shifted = _agreement(t)
    results = results + (("shift rectification", shifted),)
    minimal = None
    if not agree:
        n = len(t.chain)
        for m in range(2, n + 1):
            for i in range(n - m + 1):
                cand = Tableau(t.chain[i:i + m])
                if cand.boxes() and not _agreement(cand)[0]:
                    minimal = cand
                    break
            if minimal is not None:
                break
    return RectifyReport(agree, results, minimal)
