"""Column complements of tableaux, finite and stable, and of diagrams.

The finite complement of a tableau over 1..k with at most l columns
reverses its chain, stacking one full row of length l per step: the entry
set of each column becomes the complementary set of 1..k, reversed.  The
stable complement does the same with infinite rows instead of rows of
length l, so no column bound is needed.
"""

from dataclasses import dataclass

from .errors import ParameterError
from .shapes import StableShape, pad, prepend
from .tableau import StableTableau, Tableau, equal_up_to_vshift


@dataclass(frozen=True)
class ComplementParams:
    """Alphabet size k and column bound l shared across a computation."""

    k: int
    l: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ParameterError("alphabet size must be a nonnegative int")
        if not isinstance(self.l, int) or self.l < 0:
            raise ParameterError("column bound must be a nonnegative int")


def _check(t, params):
    if t.alphabet_size != params.k:
        raise ParameterError("tableau alphabet size %d does not match k=%d"
                             % (t.alphabet_size, params.k))
    for s in t.chain:
        if s and s[-1] < 0:
            raise ParameterError("cannot complement negative row lengths: %r" % (s,))
    if t.outer and t.outer[0] > params.l:
        raise ParameterError("tableau is wider than l=%d columns" % params.l)


def complement(t, params):
    """Complement every column of a tableau within k entries and l columns."""
    _check(t, params)
    k = params.k
    return Tableau(tuple(prepend(t.chain[k - i], params.l, i)
                         for i in range(k + 1)))


def complement_involution_check(t, params):
    """Whether complementing twice returns the tableau up to vertical shift."""
    cc = complement(complement(t, params), params)
    return equal_up_to_vshift(cc, t, params.l)


def stable_complement(t, width=None):
    """Complement columns with infinite rows in place of bounded ones.

    An ordinary tableau becomes a stable tableau whose windows are the
    reversed chain, padded to a common width; a stable tableau comes back
    as the ordinary tableau of its reversed windows.
    """
    if isinstance(t, StableTableau):
        return Tableau(tuple(s.parts for s in reversed(t.chain)))
    k = t.alphabet_size
    n = max([width or 0] + [len(s) for s in t.chain])
    return StableTableau(tuple(StableShape(i, pad(t.chain[k - i], n))
                               for i in range(k + 1)))


def complement_growth_rows(g, params):
    """Complement every row chain of a growth diagram."""
    from .growth import GrowthDiagram

    rows = [complement(Tableau(row), params).chain for row in g.grid]
    return GrowthDiagram(tuple(rows))


def complement_growth_cols(g, params):
    """Complement every column chain of a growth diagram."""
    from .growth import GrowthDiagram

    nrows = len(g.grid)
    ncols = len(g.grid[0])
    cols = [complement(Tableau(tuple(g.grid[i][j] for i in range(nrows))),
                       params).chain
            for j in range(ncols)]
    grid = tuple(tuple(cols[j][i] for j in range(ncols)) for i in range(nrows))
    return GrowthDiagram(grid)
