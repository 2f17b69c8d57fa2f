"""Hopscotch and Tesler's rightward shift game.

A hopscotch move passes an ordinary tableau through a stable tableau: the
stable chain is complemented to an ordinary tableau, the pair runs through
the column insertion rule, and the companion output is complemented back.
Tesler's shift game hops every entry of a tableau northeast to the nearest
free spot, dropping the entries that have nowhere to go; iterating it
rectifies a standard tableau one row at a time.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .complement import stable_complement
from .errors import (BorderMismatchError, ParameterError, ShapeError,
                     TableauError)
from .growth import LocalRule, fill_pair
from .shapes import (Cell, StableShape, add_box, as_shape, cover_cell,
                     covers, is_horizontal_strip, norm0, pad, strip_cells)
from .tableau import Filling, StableTableau, from_filling


@dataclass(frozen=True)
class AlmostStandardTableau:
    """A chain of shapes where each step adds one box or nothing."""

    chain: tuple

    def __post_init__(self):
        chain = tuple(norm0(as_shape(s)) for s in self.chain)
        if not chain:
            raise TableauError("a chain needs at least one shape")
        object.__setattr__(self, "chain", chain)
        for a, b in zip(chain, chain[1:]):
            if a != b and not covers(a, b):
                raise TableauError("%r to %r is neither a cover nor an"
                                   " equality" % (a, b))

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
        return "AlmostStandardTableau(%r)" % (self.chain,)


class ShiftResult(NamedTuple):
    shifted: AlmostStandardTableau
    removed: frozenset


def _nonnegative(dg):
    return all(x >= 0 for row in dg.grid for s in row for x in s)


def hopscotch_pair(p, q, direction=None):
    """Move a tableau through a stable tableau, or undo such a move.

    The ordinary chain must start at the last window of the stable chain
    (the "forward" move) or end at its first window ("reverse").  When
    both hold the pair is ambiguous and the two moves disagree; pass
    direction to pick one, otherwise the move that undoes an earlier one
    is preferred if its diagram stays nonnegative.  A pair produced by a
    forward move always undoes with "reverse" and vice versa.  Returns
    the moved tableau and the moved stable tableau.
    """
    qs = stable_complement(q)
    forward = p.chain[0] == qs.chain[0]
    backward = p.chain[-1] == qs.chain[-1]
    if direction is not None:
        if direction not in ("forward", "reverse"):
            raise ParameterError("direction must be forward or reverse")
        if not (forward if direction == "forward" else backward):
            raise BorderMismatchError("the tableau does not meet the %s end"
                                      " of the stable chain" % direction)
        forward = direction == "forward"
        backward = not forward
    if not forward and not backward:
        raise BorderMismatchError("the tableau does not meet either end of"
                                  " the stable chain")
    if backward:
        try:
            dg, t, u = fill_pair(p, qs, LocalRule("C", "reverse"))
        except (ShapeError, TableauError):
            if not forward:
                raise
        else:
            if not forward or _nonnegative(dg):
                return t, stable_complement(u)
    dg, t, u = fill_pair(p, qs, LocalRule("C"))
    return t, stable_complement(u)


def tesler_shift(p):
    """One rightward shift of an almost standard tableau.

    Entries hop northeast: a box added in row r moves the shifted chain
    forward in the nearest strip row above r, and when the strip has no
    boxes above r the entry leaves the tableau instead.  Returns the
    shifted chain and the set of steps whose entries left.
    """
    chain = p.chain
    alphas = [chain[0]]
    removed = set()
    for i in range(1, len(chain)):
        prev, cur, a = chain[i - 1], chain[i], alphas[-1]
        if cur == prev:
            alphas.append(a)
        elif not covers(prev, cur):
            raise TableauError("steps must add one box or nothing")
        else:
            r = cover_cell(prev, cur).row
            rows = [c.row for c in strip_cells(a, prev) if c.row < r]
            if rows:
                alphas.append(add_box(a, max(rows)))
            else:
                alphas.append(a)
                removed.add(i)
        assert is_horizontal_strip(alphas[-1], cur)
    return ShiftResult(AlmostStandardTableau(tuple(alphas)), frozenset(removed))


def tesler_rectify(p):
    """Rectify a standard tableau by repeated rightward shifts.

    The entries removed by the i-th shift, in increasing order, form row i
    of the result.
    """
    k = p.alphabet_size
    cur = AlmostStandardTableau(p.chain)
    cells = {}
    widths = []
    for r in range(1, k + 1):
        cur, removed = tesler_shift(cur)
        for j, e in enumerate(sorted(removed), start=1):
            cells[Cell(r, j)] = e
        widths.append(len(removed))
    if len(set(cur.chain)) != 1:
        raise TableauError("shifting %d times did not empty the tableau" % k)
    return from_filling(Filling(cells, (), tuple(widths)), k)


def tesler_hopscotch_check(p):
    """Whether one hopscotch move reproduces the rightward shift.

    Pushes p through the two row stable strip hugging its border: one
    half infinite row past the widest part, one below the deepest.  The
    output chain must track the shifted chain, the first row growing by
    one for every removed entry.
    """
    if p.boxes() == 0:
        return True
    n = len(p.outer)
    b = p.outer[0]
    q = StableTableau((StableShape(0, (b,) + pad(p.inner, n)),
                       StableShape(1, pad(p.inner, n) + (0,))))
    t, _ = hopscotch_pair(p, q)
    shifted, removed = tesler_shift(p)
    a = 0
    for i, al in enumerate(shifted.chain):
        if i in removed:
            a += 1
        if t.chain[i] != norm0((b + a,) + pad(al, n)):
            return False
    return True
