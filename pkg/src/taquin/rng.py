"""Deterministic random shapes, fillings, and tableaux.

One documented 64-bit mixer drives everything, so a seed reproduces the
same objects on any platform, and trial seeds derived from (seed, index)
make batched trials independent of execution order.
"""

from .shapes import Cell, strip_cells
from .tableau import Filling, from_filling

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(x):
    """Finalization mixer: xor-shift multiply, standard constants."""
    x &= MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
    return x ^ (x >> 31)


def trial_seed(seed, index):
    """A stream seed for one trial, independent of trial order."""
    return mix64(seed ^ mix64(index))


class Stream:
    """Sequence of 64-bit words from a seed: add a constant, mix."""

    def __init__(self, seed):
        self.state = seed & MASK

    def next64(self):
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def below(self, n):
        """Uniform integer in 0..n-1 by rejection."""
        limit = (MASK + 1) - (MASK + 1) % n
        while True:
            x = self.next64()
            if x < limit:
                return x % n


def random_shape(stream, max_rows, max_cols):
    """Uniform partition with at most max_rows rows of length at most
    max_cols."""
    while True:
        parts = [stream.below(max_cols + 1) for _ in range(max_rows)]
        if all(a >= b for a, b in zip(parts, parts[1:])):
            return tuple(p for p in parts if p)


def random_skew(stream, max_rows, max_cols, max_boxes=None):
    """Inner and outer shapes of a nonempty skew shape in the given box."""
    while True:
        outer = random_shape(stream, max_rows, max_cols)
        if not outer:
            continue
        inner = tuple(stream.below(r + 1) for r in outer)
        if any(a < b for a, b in zip(inner, inner[1:])):
            continue
        cells = strip_cells(tuple(p for p in inner if p), outer)
        if not cells:
            continue
        if max_boxes is not None and len(cells) > max_boxes:
            continue
        return tuple(p for p in inner if p), outer


def random_filling(stream, max_rows, max_cols, max_entry, max_boxes=None):
    """A filling of a random skew shape with entries in 1..max_entry.

    Entries are sampled per cell and the filling rejected until its rows
    and columns are monotone; shapes with a column longer than max_entry
    are resampled, and a shape is also abandoned after too many entry
    rejections.
    """
    while True:
        inner, outer = random_skew(stream, max_rows, max_cols, max_boxes)
        cells = strip_cells(inner, outer)
        cols = {}
        for c in cells:
            cols[c.col] = cols.get(c.col, 0) + 1
        if max(cols.values()) > max_entry:
            continue
        for _ in range(5000):
            entries = {c: stream.below(max_entry) + 1 for c in cells}
            try:
                return Filling(entries, inner, outer)
            except Exception:
                continue


def random_tableau(stream, max_rows, max_cols, max_entry, max_boxes=None):
    """A skew tableau over 1..max_entry on a random shape."""
    f = random_filling(stream, max_rows, max_cols, max_entry, max_boxes)
    return from_filling(f, max_entry)


def random_filling_with_inner(stream, inner, max_rows, max_cols, max_entry):
    """A filling of a random, possibly empty, skew shape over a fixed inner
    border."""
    inner = tuple(inner)
    cap = max([max_cols] + list(inner))
    while True:
        nrows = max(len(inner), stream.below(max_rows + 1))
        parts = [stream.below(cap + 1) for _ in range(nrows)]
        outer = tuple(max(p, q) for p, q in
                      zip(parts, list(inner) + [0] * nrows))
        if any(a < b for a, b in zip(outer, outer[1:])):
            continue
        outer = tuple(p for p in outer if p)
        cells = strip_cells(inner, outer)
        cols = {}
        for c in cells:
            cols[c.col] = cols.get(c.col, 0) + 1
        if cols and max(cols.values()) > max_entry:
            continue
        for _ in range(5000):
            entries = {c: stream.below(max_entry) + 1 for c in cells}
            try:
                return Filling(entries, inner, outer)
            except Exception:
                continue
