"""Growth diagrams and the local rules that fill them.

A growth diagram is a rectangular array of shapes in which every row and
every column is a tableau chain.  Each local rule completes one unit
square of the array from three of its corners:

  R  row insertion; fills toward the bottom right, reversible given a
     row bound l
  C  column insertion; fills toward the bottom right, reversible by
     refining the square into single-box steps
  J  taquin switching; fills toward the top right or bottom left
  H  single-box switching on stable or truncated strips; same geometry
     as J but moves exactly one box per column step
"""

from dataclasses import dataclass, field

from . import complement as _complement
from .errors import (BorderMismatchError, NotComputableError, ParameterError,
                     ShapeError, TableauError)
from .shapes import (StableShape, add_box, add_box_in_column, aligned,
                     as_shape, cover_cell, covers, is_horizontal_strip, join,
                     meet, norm0, pad, prepend, remove_box_in_column,
                     strip_cells, strip_columns)
from .tableau import Tableau, content, vshift, vshift_normalize

RULE_KINDS = ("R", "C", "J", "H")
INSERTION_KINDS = ("R", "C")


@dataclass(frozen=True)
class LocalRule:
    """A square-filling rule, its fill direction, and an optional row bound."""

    kind: str
    direction: str = "forward"
    l: int = None

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ParameterError("unknown rule kind %r" % (self.kind,))
        if self.direction not in ("forward", "reverse"):
            raise ParameterError("direction must be forward or reverse")
        if self.l is not None and (not isinstance(self.l, int) or self.l < 0):
            raise ParameterError("row bound must be a nonnegative int")


@dataclass(frozen=True)
class GrowthDiagram:
    """Rectangular array of shapes whose rows and columns are all tableaux."""

    grid: tuple
    row_content: tuple = field(init=False, default=None)
    col_content: tuple = field(init=False, default=None)

    def __post_init__(self):
        grid = tuple(tuple(norm0(as_shape(s)) for s in row) for row in self.grid)
        if not grid or any(len(row) != len(grid[0]) for row in grid):
            raise TableauError("grid must be rectangular and nonempty")
        if not grid[0]:
            raise TableauError("grid must be rectangular and nonempty")
        object.__setattr__(self, "grid", grid)
        rows = [Tableau(row) for row in grid]
        cols = [Tableau(tuple(grid[i][j] for i in range(len(grid))))
                for j in range(len(grid[0]))]
        rc = content(rows[0])
        cc = content(cols[0])
        if any(content(t) != rc for t in rows):
            raise TableauError("rows do not share a content")
        if any(content(t) != cc for t in cols):
            raise TableauError("columns do not share a content")
        object.__setattr__(self, "row_content", rc)
        object.__setattr__(self, "col_content", cc)

    @property
    def nrows(self):
        return len(self.grid)

    @property
    def ncols(self):
        return len(self.grid[0])

    def row(self, i):
        return Tableau(self.grid[i])

    def col(self, j):
        return Tableau(tuple(self.grid[i][j] for i in range(self.nrows)))


def rule_R(alpha, beta, gamma, l):
    """Complete a row-insertion square toward its outer corner.

    All three shapes get a row of length l prepended, the recurrence
    delta[i] = max(beta, gamma)[i] + min(beta, gamma)[i-1] - alpha[i-1]
    runs down the rows, and the prepended row is stripped again.
    """
    if not is_horizontal_strip(alpha, beta) or not is_horizontal_strip(alpha, gamma):
        raise ShapeError("square sides %r/%r and %r/%r must be horizontal strips"
                         % (beta, alpha, gamma, alpha))
    a = prepend(norm0(alpha), l, 1)
    b = prepend(norm0(beta), l, 1)
    g = prepend(norm0(gamma), l, 1)
    n = max(len(a), len(b), len(g)) + 1
    a, b, g = pad(a, n), pad(b, n), pad(g, n)
    d = [max(b[0], g[0])]
    for i in range(1, n):
        d.append(max(b[i], g[i]) + min(b[i - 1], g[i - 1]) - a[i - 1])
    return norm0(as_shape(tuple(d[1:])))


def rule_R_reverse(beta, gamma, delta, l):
    """Recover the inner corner of a row-insertion square under a row bound."""
    if not is_horizontal_strip(beta, delta) or not is_horizontal_strip(gamma, delta):
        raise ShapeError("square sides %r/%r and %r/%r must be horizontal strips"
                         % (delta, beta, delta, gamma))
    b = prepend(norm0(beta), l, 1)
    g = prepend(norm0(gamma), l, 1)
    dd = prepend(norm0(delta), l, 1)
    n = max(len(b), len(g), len(dd)) + 1
    b, g, dd = pad(b, n), pad(g, n), pad(dd, n)
    a = [0] * n
    a[n - 1] = min(b[n - 1], g[n - 1])
    for j in range(n - 2, -1, -1):
        a[j] = max(b[j + 1], g[j + 1]) + min(b[j], g[j]) - dd[j + 1]
    return norm0(as_shape(tuple(a[1:])))


def rule_J(alpha, beta, delta, l=None):
    """Complete a switching square from a chain alpha, beta, delta.

    gamma[i] = max(delta[i+1], alpha[i]) + min(delta[i], alpha[i-1]) - beta[i]
    with alpha[0] read as the row bound, by default the first row of delta.
    """
    if not is_horizontal_strip(alpha, beta) or not is_horizontal_strip(beta, delta):
        raise ShapeError("%r, %r, %r is not a two-strip chain"
                         % (alpha, beta, delta))
    n = max(len(alpha), len(beta), len(delta)) + 1
    a, b, d = pad(norm0(alpha), n), pad(norm0(beta), n), pad(norm0(delta), n)
    if l is None:
        l = d[0]
    elif l < d[0]:
        raise ShapeError("row bound %d is narrower than %r" % (l, delta))
    g = []
    for i in range(n):
        d_next = d[i + 1] if i + 1 < n else 0
        a_prev = a[i - 1] if i >= 1 else l
        g.append(max(d_next, a[i]) + min(d[i], a_prev) - b[i])
    return norm0(as_shape(tuple(g)))


def rule_J_strips(alpha, beta, delta):
    """Switch the two strips beta/alpha and delta/beta by cell surgery.

    Columns holding a box of each strip swap them in place; in every row
    the remaining boxes of the outer strip slide to the leftmost free
    cells and those of the inner strip to the rightmost.  Returns the
    chain alpha, gamma, delta with the strips exchanged.
    """
    alpha, beta, delta = norm0(alpha), norm0(beta), norm0(delta)
    inner_cells = strip_cells(alpha, beta)
    outer_cells = strip_cells(beta, delta)
    inner_by_col = {c.col: c for c in inner_cells}
    outer_by_col = {c.col: c for c in outer_cells}
    swapped = set(inner_by_col) & set(outer_by_col)

    outer_rows = {}
    for col in swapped:
        outer_rows.setdefault(inner_by_col[col].row, []).append(col)
    free_inner = {}
    for c in inner_cells:
        if c.col not in swapped:
            free_inner[c.row] = free_inner.get(c.row, 0) + 1
    free_outer = {}
    for c in outer_cells:
        if c.col not in swapped:
            free_outer[c.row] = free_outer.get(c.row, 0) + 1

    region = strip_cells(alpha, delta)
    rows = sorted({c.row for c in region})
    for r in rows:
        taken = set(outer_rows.get(r, []))
        for col in swapped:
            if outer_by_col[col].row == r:
                taken.add(col)
        open_cols = sorted(c.col for c in region if c.row == r and c.col not in taken)
        n_out = free_outer.get(r, 0)
        n_in = free_inner.get(r, 0)
        if n_out + n_in != len(open_cols):
            raise ShapeError("strips of %r, %r, %r do not switch"
                             % (alpha, beta, delta))
        outer_rows.setdefault(r, []).extend(open_cols[:n_out])

    a = aligned(alpha, delta)[0]
    gamma = tuple(a[r - 1] + len(outer_rows.get(r, [])) for r in range(1, len(a) + 1))
    gamma = norm0(as_shape(gamma))
    placed = {(r, col) for r, cols in outer_rows.items() for col in cols}
    if {(c.row, c.col) for c in strip_cells(alpha, gamma)} != placed:
        raise ShapeError("strips of %r, %r, %r do not switch"
                         % (alpha, beta, delta))
    return Tableau((alpha, gamma, delta))


def rule_C_carries(alpha, beta, gamma):
    """Column-insertion square with its carry vector, bottom row upward."""
    m = len(alpha)
    if len(beta) != m or len(gamma) != m:
        raise ShapeError("rule C needs rows of equal explicit length")
    if not is_horizontal_strip(alpha, beta) or not is_horizontal_strip(alpha, gamma):
        raise ShapeError("square sides %r/%r and %r/%r must be horizontal strips"
                         % (beta, alpha, gamma, alpha))
    if m == 0:
        return (), ()
    delta = [0] * m
    d = [0] * m
    for i in range(m - 1, 0, -1):
        t = beta[i] + gamma[i] + d[i] - alpha[i]
        delta[i] = min(t, alpha[i - 1])
        d[i - 1] = max(t - alpha[i - 1], 0)
    delta[0] = beta[0] + gamma[0] + d[0] - alpha[0]
    return as_shape(tuple(delta)), tuple(d)


def rule_C(alpha, beta, gamma):
    """Complete a column-insertion square toward its outer corner."""
    return rule_C_carries(alpha, beta, gamma)[0]


def _cover_chain(inner, outer):
    """Single-box refinement of a horizontal strip, columns ascending."""
    cells = sorted(strip_cells(inner, outer), key=lambda c: c.col)
    out = [tuple(inner)]
    cur = list(inner)
    for c in cells:
        cur[c.row - 1] += 1
        out.append(tuple(cur))
    return out


def _std_C_reverse(b, c, d):
    """Inner corner of a column-insertion square whose sides are covers."""
    if b != c:
        if join(b, c) != tuple(d):
            raise ShapeError("%r, %r, %r is not a column-insertion square"
                             % (b, c, d))
        return meet(b, c)
    col = cover_cell(b, d).col
    return remove_box_in_column(b, col - 1)


def rule_C_reverse(beta, gamma, delta):
    """Recover the inner corner of a column-insertion square.

    The square is refined into single-box steps, each small square is
    reversed, and the result is checked by recomputing forward.
    """
    m = len(delta)
    if len(beta) != m or len(gamma) != m:
        raise ShapeError("rule C needs rows of equal explicit length")
    if not is_horizontal_strip(beta, delta) or not is_horizontal_strip(gamma, delta):
        raise ShapeError("square sides %r/%r and %r/%r must be horizontal strips"
                         % (delta, beta, delta, gamma))
    if beta == tuple(delta):
        alpha = tuple(gamma)
    elif gamma == tuple(delta):
        alpha = tuple(beta)
    else:
        vert = _cover_chain(beta, delta)
        horiz = _cover_chain(gamma, delta)
        s, r = len(vert) - 1, len(horiz) - 1
        h = [[None] * (r + 1) for _ in range(s + 1)]
        for x in range(s + 1):
            h[x][r] = vert[x]
        for y in range(r + 1):
            h[s][y] = horiz[y]
        for x in range(s, 0, -1):
            for y in range(r, 0, -1):
                h[x - 1][y - 1] = _std_C_reverse(h[x - 1][y], h[x][y - 1], h[x][y])
        alpha = h[0][0]
    if rule_C(alpha, beta, gamma) != tuple(delta):
        raise TableauError("%r, %r, %r has no valid inner corner"
                           % (beta, gamma, delta))
    return alpha


def fomin_rs_square(alpha, beta, gamma):
    """Outer corner of a row-insertion square whose sides are covers."""
    if not covers(alpha, beta) or not covers(alpha, gamma):
        raise ShapeError("%r must cover %r on both sides" % ((beta, gamma), alpha))
    if norm0(beta) != norm0(gamma):
        return norm0(join(beta, gamma))
    row = cover_cell(alpha, beta).row
    return norm0(add_box(beta, row + 1))


def fomin_jdt_square(alpha, beta, delta):
    """Fourth shape of a two-cover interval, or beta when there is only one."""
    if not covers(alpha, beta) or not covers(beta, delta):
        raise ShapeError("%r, %r, %r is not a two-cover chain"
                         % (alpha, beta, delta))
    a, d = aligned(norm0(alpha), norm0(delta))
    mids = set()
    for c in strip_cells(a, d):
        shape = list(d)
        shape[c.row - 1] -= 1
        try:
            mid = norm0(as_shape(tuple(shape)))
        except ShapeError:
            continue
        if is_horizontal_strip(a, mid):
            mids.add(mid)
    mids.discard(norm0(beta))
    if mids:
        return mids.pop()
    return norm0(beta)


def _stable_strip_columns(alpha, beta):
    """Column intervals of a stable strip: bottom ray, windows, top ray."""
    a, b = alpha.parts, beta.parts
    n = len(a)
    intervals = [(None, b[n - 1])]
    for i in range(1, n):
        if b[i - 1] > a[i]:
            intervals.append((a[i], b[i - 1]))
    intervals.append((a[0], None))
    return intervals


def _in_intervals(c, intervals):
    for lo, hi in intervals:
        if (lo is None or c > lo) and (hi is None or c <= hi):
            return True
    return False


def _stable_add_box_col(s, col):
    parts = list(s.parts)
    for i in range(len(parts)):
        if parts[i] == col - 1:
            parts[i] += 1
            return StableShape(s.ninf, tuple(parts))
    raise ShapeError("no row of %r ends at column %d" % (s, col - 1))


def _stable_remove_box_col(s, col):
    parts = list(s.parts)
    for i in range(len(parts) - 1, -1, -1):
        if parts[i] == col:
            parts[i] -= 1
            return StableShape(s.ninf, tuple(parts))
    raise ShapeError("no row of %r ends at column %d" % (s, col))


def rule_H(alpha, beta, delta):
    """Complete a single-box switching square below its top strip.

    The new box lands in the column of the box delta/beta when the strip
    beta/alpha occupies that column, otherwise in the nearest occupied
    column to its right.  On truncated strips that column may not exist.
    """
    if isinstance(alpha, StableShape):
        if beta.ninf != delta.ninf or len(beta.parts) != len(delta.parts):
            raise ShapeError("%r does not cover %r" % (delta, beta))
        c = cover_cell(beta.parts, delta.parts).col
        intervals = _stable_strip_columns(alpha, beta)
        if _in_intervals(c, intervals):
            return _stable_add_box_col(alpha, c)
        best = None
        for lo, hi in intervals:
            first = c + 1 if lo is None else max(lo + 1, c + 1)
            if hi is None or first <= hi:
                best = first if best is None else min(best, first)
        return _stable_add_box_col(alpha, best)
    c = cover_cell(beta, delta).col
    cols = strip_columns(alpha, beta)
    if c in cols:
        return norm0(add_box_in_column(alpha, c))
    bigger = [h for h in cols if h > c]
    if not bigger:
        raise NotComputableError(
            "no strip column of %r/%r lies beyond column %d" % (beta, alpha, c))
    return norm0(add_box_in_column(alpha, min(bigger)))


def rule_H_reverse(alpha, beta, delta):
    """Complete a single-box switching square above its bottom strip."""
    if isinstance(alpha, StableShape):
        if alpha.ninf != beta.ninf or len(alpha.parts) != len(beta.parts):
            raise ShapeError("%r does not cover %r" % (beta, alpha))
        c = cover_cell(alpha.parts, beta.parts).col
        intervals = _stable_strip_columns(beta, delta)
        if _in_intervals(c, intervals):
            return _stable_remove_box_col(delta, c)
        best = None
        for lo, hi in intervals:
            last = c - 1 if hi is None else min(hi, c - 1)
            if lo is None or last > lo:
                best = last if best is None else max(best, last)
        return _stable_remove_box_col(delta, best)
    c = cover_cell(alpha, beta).col
    cols = strip_columns(beta, delta)
    if c in cols:
        return norm0(remove_box_in_column(delta, c))
    smaller = [h for h in cols if h < c]
    if not smaller:
        raise NotComputableError(
            "no strip column of %r/%r lies before column %d" % (delta, beta, c))
    return norm0(remove_box_in_column(delta, max(smaller)))


def _insertion_square(kind, nw, ne, sw, l):
    if kind == "R":
        bound = l
        if bound is None:
            b1 = ne[0] if ne else 0
            g1 = sw[0] if sw else 0
            bound = max(b1, g1)
        return rule_R(nw, ne, sw, bound)
    return rule_C(nw, ne, sw)


def _fill_insertion_forward(p, q, rule):
    if p.chain[0] != q.chain[0]:
        raise BorderMismatchError("row chain starts at %r, column chain at %r"
                                  % (p.chain[0], q.chain[0]))
    nrows, ncols = len(q.chain), len(p.chain)
    g = [[None] * ncols for _ in range(nrows)]
    if rule.kind == "C":
        m = max(len(s) for s in p.chain + q.chain)
        g[0] = [pad(s, m) for s in p.chain]
        for i in range(nrows):
            g[i][0] = pad(q.chain[i], m)
    else:
        g[0] = list(p.chain)
        for i in range(nrows):
            g[i][0] = q.chain[i]
    for i in range(1, nrows):
        for j in range(1, ncols):
            g[i][j] = _insertion_square(rule.kind, g[i - 1][j - 1], g[i - 1][j],
                                        g[i][j - 1], rule.l)
    dg = GrowthDiagram(tuple(tuple(row) for row in g))
    return dg, dg.row(nrows - 1), dg.col(ncols - 1)


def _fill_insertion_reverse(p, q, rule):
    if p.chain[-1] != q.chain[-1]:
        raise BorderMismatchError("row chain ends at %r, column chain at %r"
                                  % (p.chain[-1], q.chain[-1]))
    if rule.kind == "R" and rule.l is None:
        raise ParameterError("reversing row insertion needs a row bound")
    nrows, ncols = len(q.chain), len(p.chain)
    g = [[None] * ncols for _ in range(nrows)]
    if rule.kind == "C":
        m = max(len(s) for s in p.chain + q.chain)
        g[nrows - 1] = [pad(s, m) for s in p.chain]
        for i in range(nrows):
            g[i][ncols - 1] = pad(q.chain[i], m)
    else:
        g[nrows - 1] = list(p.chain)
        for i in range(nrows):
            g[i][ncols - 1] = q.chain[i]
    for i in range(nrows - 1, 0, -1):
        for j in range(ncols - 1, 0, -1):
            if rule.kind == "R":
                g[i - 1][j - 1] = rule_R_reverse(g[i - 1][j], g[i][j - 1],
                                                 g[i][j], rule.l)
            else:
                g[i - 1][j - 1] = rule_C_reverse(g[i - 1][j], g[i][j - 1], g[i][j])
    dg = GrowthDiagram(tuple(tuple(row) for row in g))
    return dg, dg.row(0), dg.col(0)


def _switch_ne(kind, nw, sw, se, l):
    if kind == "J":
        return rule_J(nw, sw, se, l)
    return rule_H_reverse(nw, sw, se)


def _switch_sw(kind, nw, ne, se, l):
    if kind == "J":
        return rule_J(nw, ne, se, l)
    return rule_H(nw, ne, se)


def _fill_switching(p, q, rule):
    m, n = len(p.chain) - 1, len(q.chain) - 1
    if q.chain[0] == p.chain[-1]:
        g = [[None] * (n + 1) for _ in range(m + 1)]
        for i in range(m + 1):
            g[i][0] = p.chain[i]
        for j in range(n + 1):
            g[m][j] = q.chain[j]
        for j in range(1, n + 1):
            for i in range(m, 0, -1):
                g[i - 1][j] = _switch_ne(rule.kind, g[i - 1][j - 1], g[i][j - 1],
                                         g[i][j], rule.l)
        dg = GrowthDiagram(tuple(tuple(row) for row in g))
        return dg, dg.col(n), dg.row(0)
    if p.chain[0] == q.chain[-1]:
        g = [[None] * (n + 1) for _ in range(m + 1)]
        for j in range(n + 1):
            g[0][j] = q.chain[j]
        for i in range(m + 1):
            g[i][n] = p.chain[i]
        for i in range(1, m + 1):
            for j in range(n, 0, -1):
                g[i][j - 1] = _switch_sw(rule.kind, g[i - 1][j - 1], g[i - 1][j],
                                         g[i][j], rule.l)
        dg = GrowthDiagram(tuple(tuple(row) for row in g))
        return dg, dg.col(0), dg.row(m)
    raise BorderMismatchError("neither chain extends the other")


def fill_pair(p, q, rule):
    """Fill the growth diagram spanned by two border chains.

    Insertion rules pair a row chain p with a column chain q sharing the
    inner corner (or the outer corner when reversing).  Switching rules
    pair a column chain p with a row chain q, one extending the other.
    Returns the diagram and the two opposite border chains.
    """
    if rule.kind in INSERTION_KINDS:
        if rule.direction == "reverse":
            return _fill_insertion_reverse(p, q, rule)
        return _fill_insertion_forward(p, q, rule)
    return _fill_switching(p, q, rule)


def _width_check(dg, l):
    for row in dg.grid:
        for s in row:
            if s and s[0] > l:
                raise ParameterError("fill exceeds %d columns" % l)


def apply_complemented(rule, p, q, params):
    """Run a rule against the complement of q and complement the q side back.

    Insertion rules take an extension pair and return the switched pair;
    switching rules take a pair sharing a border and return an insertion
    result.  Complementing the H rule needs stable shapes, which is the
    hopscotch pairing.
    """
    if rule.kind == "H":
        raise ParameterError("complementing the H rule needs stable shapes; "
                             "use hopscotch_pair")
    k, l = params.k, params.l
    qc = _complement.complement(q, params)
    if rule.kind in INSERTION_KINDS:
        if q.chain[0] == p.chain[-1]:
            shifted = vshift(p, l, k)
            dg, row1, col1 = fill_pair(qc, shifted,
                                       LocalRule(rule.kind, "reverse", l))
            _width_check(dg, l)
            t = vshift_normalize(col1, l)
            u = vshift_normalize(_complement.complement(row1, params), l)
            return t, u
        if p.chain[0] == q.chain[-1]:
            dg, rown, coln = fill_pair(qc, p, LocalRule(rule.kind, "forward", l))
            _width_check(dg, l)
            t = vshift_normalize(coln, l)
            u = vshift_normalize(_complement.complement(rown, params), l)
            return t, u
        raise BorderMismatchError("neither chain extends the other")
    if p.chain[-1] == q.chain[-1]:
        dg, t_col, u_row = fill_pair(p, qc, LocalRule("J", "forward", l))
        _width_check(dg, l)
        t = vshift_normalize(t_col, l)
        u = vshift_normalize(_complement.complement(u_row, params), l)
        return t, u
    if p.chain[0] == q.chain[0]:
        shifted = vshift(p, l, k)
        dg, t_col, u_row = fill_pair(shifted, qc, LocalRule("J", "forward", l))
        _width_check(dg, l)
        t = vshift_normalize(t_col, l)
        u = vshift_normalize(_complement.complement(u_row, params), l)
        return t, u
    raise BorderMismatchError("the chains share neither border")


def _strips_over(base, window):
    """All shapes one horizontal strip above base inside a row/column window."""
    wr, wc = window
    base = pad(norm0(base), wr)
    rows = []
    for r in range(wr):
        hi = wc if r == 0 else base[r - 1]
        rows.append(range(base[r], hi + 1))

    out = []

    def rec(r, acc):
        if r == wr:
            shape = norm0(tuple(acc))
            if is_horizontal_strip(base, shape):
                out.append(shape)
            return
        for v in rows[r]:
            if r > 0 and v > acc[r - 1]:
                continue
            acc.append(v)
            rec(r + 1, acc)
            acc.pop()

    rec(0, [])
    return out


def _strips_under(base, window):
    """All shapes one horizontal strip below base inside a window."""
    wr, wc = window
    base = pad(norm0(base), wr)
    out = []

    def rec(r, acc):
        if r == wr:
            shape = norm0(tuple(acc))
            if is_horizontal_strip(shape, base):
                out.append(shape)
            return
        hi = base[r]
        lo = base[r + 1] if r + 1 < wr else 0
        for v in range(lo, hi + 1):
            if r > 0 and v > acc[r - 1]:
                continue
            acc.append(v)
            rec(r + 1, acc)
            acc.pop()

    rec(0, [])
    return out


def rule_moves(t, rule, window):
    """Companion moves of a tableau under a rule, with the moved tableau.

    Each move pairs the tableau with a two-shape chain touching its
    border inside the window and keeps the output of matching content.
    Labels are (direction, companion shape).
    """
    moves = []
    kind = rule.kind
    inner, outer = t.chain[0], t.chain[-1]
    wr, wc = window
    if kind == "J":
        for sig in _strips_over(outer, window):
            if sig == outer:
                continue
            _, new, _ = fill_pair(t, Tableau((outer, sig)), rule)
            moves.append((("up", sig), new))
        for sig in _strips_under(inner, window):
            if sig == inner:
                continue
            _, new, _ = fill_pair(t, Tableau((sig, inner)), rule)
            moves.append((("down", sig), new))
    elif kind == "H":
        out_p = pad(outer, wr)
        for r in range(1, wr + 1):
            if out_p[r - 1] >= wc:
                continue
            try:
                sig = norm0(add_box(outer, r))
            except ShapeError:
                continue
            try:
                _, _, new = fill_pair(Tableau((outer, sig)), t, rule)
            except NotComputableError:
                new = None
            moves.append((("up", sig), new))
        for r in range(1, len(inner) + 1):
            shape = list(inner)
            shape[r - 1] -= 1
            try:
                sig = norm0(as_shape(tuple(shape)))
            except ShapeError:
                continue
            try:
                _, _, new = fill_pair(Tableau((sig, inner)), t, rule)
            except NotComputableError:
                new = None
            moves.append((("down", sig), new))
    elif kind == "C":
        for sig in _strips_over(inner, window):
            if sig == inner:
                continue
            _, new, _ = fill_pair(t, Tableau((inner, sig)),
                                  LocalRule("C", "forward"))
            moves.append((("forward", sig), new))
        for sig in _strips_under(outer, window):
            if sig == outer:
                continue
            try:
                _, new, _ = fill_pair(t, Tableau((sig, outer)),
                                      LocalRule("C", "reverse"))
            except (ShapeError, TableauError):
                new = None
            moves.append((("reverse", sig), new))
    else:
        raise ParameterError("dual equivalence moves need a switching or "
                             "column rule")
    return moves


def _move_window(a):
    rows = len(a.outer) + 2
    cols = (a.outer[0] if a.outer else 0) + 2
    return rows, cols


def l_dual_equivalent(p, p2, rule, bound=None):
    """Whether every move sequence up to the bound gives equal shape traces."""
    if p.chain[0] != p2.chain[0] or p.chain[-1] != p2.chain[-1]:
        return False
    if content(p) != content(p2):
        return False
    window = _move_window(p)
    if bound is None:
        bound = 2 * p.boxes()
    seen = set()
    stack = [(p, p2, 0)]
    while stack:
        a, b, depth = stack.pop()
        key = (a.chain, b.chain)
        if key in seen or depth >= bound:
            continue
        seen.add(key)
        moves_a = dict(rule_moves(a, rule, window))
        moves_b = dict(rule_moves(b, rule, window))
        if set(moves_a) != set(moves_b):
            return False
        for label, na in moves_a.items():
            nb = moves_b[label]
            if (na is None) != (nb is None):
                return False
            if na is None:
                continue
            if na.chain[0] != nb.chain[0] or na.chain[-1] != nb.chain[-1]:
                return False
            if _fits(na, window):
                stack.append((na, nb, depth + 1))
    return True


def _fits(t, window):
    wr, wc = window
    if t.chain[0] and t.chain[0][-1] < 0:
        return False
    return len(t.outer) <= wr and (not t.outer or t.outer[0] <= wc)
