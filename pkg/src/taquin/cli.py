"""Command line front end: text formats, operations, seeded verification.

Two formats cover all input and output.  A chain is shapes joined by ","
or ">"; a shape is a compact digit string ("3221", parts 0..9) or a
bracket list ("[10,4]", with "inf" rows for stable shapes; a stable shape
with no infinite rows marks itself with a trailing "-inf").  A grid is
one line per row of a filling: "." for a cell of the inner border, "*"
for a star in rendered extraction states, integers for entries, and an
optional leading "@c" giving the starting column of the line.

Exit codes: 0 success, 1 bad input, 2 a checked property failed.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .complement import (ComplementParams, complement,
                         complement_involution_check, stable_complement)
from .errors import ParameterError, ParseError, TaquinError
from .games import (column_extract, column_extraction_rectify,
                    column_insertion_game, filling_from_cells, cocorners,
                    internal_column_insert, internal_row_insert, is_straight,
                    rectify_differential, row_extract, row_extraction_rectify,
                    row_insertion_game)
from .growth import LocalRule, fill_pair
from .hopscotch import AlmostStandardTableau, hopscotch_pair, tesler_shift
from .jdt import (dual_equivalent, jdt_pair, knuth_equivalent, p_symbol,
                  rectify, reversal, slide_in, standard_tableaux)
from .rng import (Stream, random_filling, random_filling_with_inner,
                  random_shape, random_skew, random_tableau, trial_seed)
from .shapes import (INF, NEG_INF, Cell, StableShape, norm0, pad,
                     removable_cells)
from .tableau import (Filling, StableTableau, Tableau, column_word,
                      from_filling, standard_renumbering, to_filling)


# ---------------------------------------------------------------------------
# chain format

def render_shape(s):
    if isinstance(s, StableShape):
        toks = ["inf"] * s.ninf + [str(p) for p in s.parts]
        if not s.ninf:
            toks.append("-inf")
        return "[" + ",".join(toks) + "]"
    if all(0 <= p <= 9 for p in s):
        return "".join(str(p) for p in s) or "0"
    return "[" + ",".join(str(p) for p in s) + "]"


def parse_shape(tok, pos=0):
    tok = tok.strip()
    if not tok:
        raise ParseError("empty shape", pos)
    if tok.startswith("["):
        if not tok.endswith("]"):
            raise ParseError("unclosed bracket shape", pos)
        vals = []
        body = tok[1:-1].strip()
        for piece in body.split(",") if body else ():
            piece = piece.strip()
            if piece == "inf":
                vals.append(INF)
            elif piece == "-inf":
                vals.append(NEG_INF)
            else:
                try:
                    vals.append(int(piece))
                except ValueError:
                    raise ParseError("bad part %r" % piece, pos)
        if any(v is INF or v is NEG_INF for v in vals):
            return StableShape.from_rows(vals)
        return tuple(vals)
    if not tok.isdigit():
        raise ParseError("shape %r is neither digits nor a bracket list" % tok,
                         pos)
    return tuple(int(ch) for ch in tok)


def _split_chain(s):
    parts, cur, depth, start = [], [], 0, 0
    for i, ch in enumerate(s):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced bracket", i)
        if ch in ",>" and depth == 0:
            parts.append(("".join(cur), start))
            cur, start = [], i + 1
        else:
            cur.append(ch)
    if depth:
        raise ParseError("unbalanced bracket", len(s) - 1)
    parts.append(("".join(cur), start))
    return parts


def parse_chain(s):
    """A tableau or stable tableau from its textual chain."""
    shapes = [parse_shape(tok, pos) for tok, pos in _split_chain(s)]
    stable = [isinstance(x, StableShape) for x in shapes]
    if any(stable) and not all(stable):
        raise ParseError("chain mixes finite and stable shapes")
    try:
        if any(stable):
            return StableTableau(tuple(shapes))
        return Tableau(tuple(shapes))
    except TaquinError as e:
        raise ParseError(str(e)) from e


def render_chain(t):
    return ",".join(render_shape(s) for s in t.chain)


# ---------------------------------------------------------------------------
# grid format

def parse_grid(text):
    """A filling from its textual grid."""
    lines = text.splitlines()
    while lines and not lines[-1].split():
        lines.pop()
    cells = {}
    for r, line in enumerate(lines, start=1):
        toks = line.split()
        if not toks:
            raise ParseError("blank row %d inside the grid" % r)
        col = 1
        if toks[0].startswith("@"):
            try:
                col = int(toks[0][1:])
            except ValueError:
                raise ParseError("bad column marker %r in row %d"
                                 % (toks[0], r))
            toks = toks[1:]
        seen = False
        for tok in toks:
            if tok == ".":
                if seen:
                    raise ParseError("inner cell right of an entry at row %d,"
                                     " column %d" % (r, col))
            elif tok == "*":
                raise ParseError("star cells mark extraction states and do"
                                 " not parse back into a filling")
            else:
                try:
                    e = int(tok)
                except ValueError:
                    raise ParseError("bad entry %r at row %d, column %d"
                                     % (tok, r, col))
                if e < 1:
                    raise ParseError("entries are positive: %d at row %d,"
                                     " column %d" % (e, r, col))
                cells[Cell(r, col)] = e
                seen = True
            col += 1
    if cells:
        shift = min(c.col for c in cells) - 1
        if shift:
            cells = {Cell(c.row, c.col - shift): e for c, e in cells.items()}
    try:
        return filling_from_cells(cells)
    except TaquinError as e:
        raise ParseError(str(e)) from e


def render_grid(f, stars=()):
    """The textual grid of a filling, stars overlaid if given."""
    stars = {Cell(*s) for s in stars}
    taken = set(f.cells) | stars
    if not taken:
        return ""
    nrows = max(c.row for c in taken)
    inner = pad(f.inner, nrows)
    lines = []
    for r in range(1, nrows + 1):
        row = [c for c in taken if c.row == r]
        width = max([inner[r - 1]] + [c.col for c in row])
        toks = []
        for col in range(1, width + 1):
            c = Cell(r, col)
            if c in stars:
                toks.append("*")
            elif c in f.cells:
                toks.append(str(f.cells[c]))
            else:
                toks.append(".")
        lines.append(" ".join(toks))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# rectification drivers with move logging

def _traced_rectify(algo, f, k):
    """Run one rectifier, returning the result and its move log."""
    moves = []
    if algo == "jdt":
        cur = from_filling(f, k)
        while cur.inner:
            b = sorted(removable_cells(cur.inner))[0]
            moves.append("slide-in %d %d" % b)
            cur, _, _ = slide_in(cur, b)
        return cur, moves
    if algo == "row-game":
        j = len(norm0(f.inner)) + 1
        cur = f
        while True:
            cand = [c for c in cocorners(cur) if c.row < j]
            if not cand:
                break
            moves.append("row-insert %d %d" % cand[0])
            cur = internal_row_insert(cur, cand[0])
        return _finish_row_game(cur, j, k), moves
    if algo == "col-game":
        m = f.inner[0] if f.inner else 0
        cur = f
        while True:
            cand = sorted((c for c in cocorners(cur) if c.col <= m),
                          key=lambda c: (c.col, c.row))
            if not cand:
                break
            moves.append("col-insert %d %d" % cand[0])
            cur = internal_column_insert(cur, cand[0])
        return _finish_col_game(cur, m, k), moves
    if algo == "row-extract":
        cur, rows = from_filling(f, k), []
        while cur.boxes():
            cur, rem = row_extract(cur)
            moves.append(" ".join(["row-extract"] + [str(e) for e in rem]))
            rows.append(rem)
        return _finish_row_extract(rows, k), moves
    if algo == "col-extract":
        cur = f
        if cur.cells:
            tops = {}
            for c in cur.cells:
                tops[c.col] = min(tops.get(c.col, c.row), c.row)
            j = sum(1 for r in tops.values() if r < tops[min(tops)])
            guard = len(tops) + 2
            for _ in range(j):
                moves.append("col-extract")
                cur = column_extract(cur, k)
            while cur.cells and not is_straight(cur) and guard:
                moves.append("col-extract")
                cur = column_extract(cur, k)
                guard -= 1
        return _finish_col_extract(cur, k), moves
    if algo == "tesler":
        ribbon = standard_renumbering(from_filling(f, k))
        kk = ribbon.alphabet_size
        cur, rows = AlmostStandardTableau(ribbon.chain), []
        for _ in range(kk):
            cur, removed = tesler_shift(cur)
            rem = tuple(sorted(removed))
            moves.append(" ".join(["tesler-shift"] + [str(e) for e in rem]))
            rows.append(rem)
        if len(set(cur.chain)) != 1:
            raise TaquinError("shifting did not empty the tableau")
        return _finish_row_extract(rows, kk), moves
    raise ParameterError("unknown rectifier %r" % algo)


def _finish_row_game(f, j, k):
    cells = {Cell(c.row - j + 1, c.col): e for c, e in f.cells.items()}
    return from_filling(filling_from_cells(cells), k)


def _finish_col_game(f, m, k):
    cells = {Cell(c.row, c.col - m): e for c, e in f.cells.items()}
    return from_filling(filling_from_cells(cells), k)


def _finish_row_extract(rows, k):
    cells = {Cell(i, j): e for i, rem in enumerate(rows, start=1)
             for j, e in enumerate(sorted(rem), start=1)}
    return from_filling(Filling(cells, (), tuple(len(r) for r in rows)), k)


def _finish_col_extract(f, k):
    if f.cells:
        r0 = min(c.row for c in f.cells) - 1
        c0 = min(c.col for c in f.cells) - 1
        f = filling_from_cells({Cell(c.row - r0, c.col - c0): e
                                for c, e in f.cells.items()})
    if f.inner:
        raise TaquinError("extraction did not reach a straight shape")
    return from_filling(f, k)


def _trace_text(algo, k, grid, moves, result):
    parts = ["algo %s k %d" % (algo, k), "grid", grid, "moves"]
    parts.extend(moves)
    parts.append("end")
    parts.append(render_grid(to_filling(result)))
    return "\n".join(p for p in parts if p != "") + "\n"


def _replay(text):
    """Re-execute a trace; 0 when the final grid is reproduced, else 2."""
    lines = text.splitlines()
    try:
        head = lines[0].split()
        if head[0] != "algo" or head[2] != "k" or lines[1] != "grid":
            raise IndexError
        algo, k = head[1], int(head[3])
        mv = lines.index("moves")
        endl = lines.index("end")
    except (IndexError, ValueError):
        raise ParseError("trace must be: algo line, grid, moves, end, grid")
    f = parse_grid("\n".join(lines[2:mv]))
    moves = [ln.split() for ln in lines[mv + 1:endl] if ln.split()]
    want = parse_grid("\n".join(lines[endl + 1:]))

    if algo == "jdt":
        cur = from_filling(f, k)
        for m in moves:
            cur, _, _ = slide_in(cur, Cell(int(m[1]), int(m[2])))
        got = cur
    elif algo == "row-game":
        j = len(norm0(f.inner)) + 1
        cur = f
        for m in moves:
            cur = internal_row_insert(cur, Cell(int(m[1]), int(m[2])))
        got = _finish_row_game(cur, j, k)
    elif algo == "col-game":
        mm = f.inner[0] if f.inner else 0
        cur = f
        for m in moves:
            cur = internal_column_insert(cur, Cell(int(m[1]), int(m[2])))
        got = _finish_col_game(cur, mm, k)
    elif algo == "row-extract":
        cur, rows = from_filling(f, k), []
        for m in moves:
            cur, rem = row_extract(cur)
            if list(rem) != [int(x) for x in m[1:]]:
                print("replay: pass removed %r, trace says %r"
                      % (rem, m[1:]), file=sys.stderr)
                return 2
            rows.append(rem)
        if cur.boxes():
            print("replay: entries left after the logged passes",
                  file=sys.stderr)
            return 2
        got = _finish_row_extract(rows, k)
    elif algo == "col-extract":
        cur = f
        for m in moves:
            cur = column_extract(cur, k)
        got = _finish_col_extract(cur, k)
    elif algo == "tesler":
        ribbon = standard_renumbering(from_filling(f, k))
        cur, rows = AlmostStandardTableau(ribbon.chain), []
        for m in moves:
            cur, removed = tesler_shift(cur)
            if sorted(removed) != [int(x) for x in m[1:]]:
                print("replay: shift removed %r, trace says %r"
                      % (sorted(removed), m[1:]), file=sys.stderr)
                return 2
            rows.append(tuple(sorted(removed)))
        if len(set(cur.chain)) != 1:
            print("replay: shifts did not empty the tableau", file=sys.stderr)
            return 2
        got = _finish_row_extract(rows, ribbon.alphabet_size)
    else:
        raise ParseError("unknown rectifier %r in trace" % algo)

    if to_filling(got) != want:
        print("replay: final state differs from the trace", file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------
# check suites

def _trial_involutions(stream, max_boxes, max_entry):
    t = random_tableau(stream, 4, 4, max_entry, max_boxes)
    l = max(1, (t.outer[0] if t.outer else 0) + stream.below(3))
    if not complement_involution_check(t, ComplementParams(t.alphabet_size, l)):
        return "double complement is not the identity up to shift"

    w = random_tableau(stream, 4, 4, max_entry, max_boxes)
    cut = stream.below(len(w.chain))
    p, q = Tableau(w.chain[:cut + 1]), Tableau(w.chain[cut:])
    t2, u2 = jdt_pair(p, q)
    if jdt_pair(t2, u2) != (p, q):
        return "jdt pairing does not round-trip"

    mu = random_shape(stream, 3, 3)
    a = from_filling(random_filling_with_inner(stream, mu, 4, 4, max_entry))
    b = from_filling(random_filling_with_inner(stream, mu, 4, 4, max_entry))
    _, t3, u3 = fill_pair(a, b, LocalRule("R"))
    bound = max([1] + [s[0] for c in (a, b, t3, u3) for s in c.chain if s])
    _, a2, b2 = fill_pair(t3, u3, LocalRule("R", "reverse", bound))
    if (a2, b2) != (a, b):
        return "row insertion fill does not round-trip"
    _, t4, u4 = fill_pair(a, b, LocalRule("C"))
    _, a3, b3 = fill_pair(t4, u4, LocalRule("C", "reverse"))
    if (a3, b3) != (a, b):
        return "column insertion fill does not round-trip"

    base = random_tableau(stream, 3, 3, 3, max_boxes)
    q5 = stable_complement(base)
    p5 = from_filling(random_filling_with_inner(stream, base.chain[0], 3, 3, 3))
    if p5.chain[-1] == base.chain[-1]:
        # Both ends of the stable chain meet p5, so each move must be
        # named to round-trip.
        for first, second in (("forward", "reverse"), ("reverse", "forward")):
            t5, u5 = hopscotch_pair(p5, q5, first)
            if hopscotch_pair(t5, u5, second) != (p5, q5):
                return "hopscotch %s move does not round-trip" % first
    else:
        t5, u5 = hopscotch_pair(p5, q5)
        if hopscotch_pair(t5, u5) != (p5, q5):
            return "hopscotch pairing does not round-trip"
    return None


def _trial_differential(stream, max_boxes, max_entry):
    t = random_tableau(stream, 5, 5, max_entry, max_boxes)
    rep = rectify_differential(t)
    if not rep.agree:
        return "rectifiers disagree on %r (minimal %r)" % (t, rep.minimal)
    return None


def _trial_dual(stream, max_boxes, max_entry):
    n = min(max_boxes, 3)
    while True:
        inner, outer = random_skew(stream, 3, 3, n)
        sts = standard_tableaux(inner, outer)
        if sts:
            break
    a = sts[stream.below(len(sts))]
    b = sts[stream.below(len(sts))]
    want = dual_equivalent(a, b)
    params = ComplementParams(a.alphabet_size, a.outer[0])
    if dual_equivalent(complement(a, params), complement(b, params)) != want:
        return "complement changed dual equivalence of %r, %r" % (a, b)
    return None


def _trial_words(stream, max_boxes, max_entry):
    col = (3, 2, 1)
    w = tuple(stream.below(3) + 1 for _ in range(stream.below(5)))
    v = tuple(stream.below(3) + 1 for _ in range(stream.below(5)))
    if p_symbol(col + w) != p_symbol(w + col):
        return "column word does not commute across %r" % (w,)
    if (p_symbol(col + w) == p_symbol(col + v)) != (p_symbol(w) == p_symbol(v)):
        return "column word cancellation fails on %r, %r" % (w, v)
    return None


_SUITES = (
    ("involutions", _trial_involutions, 1 << 40),
    ("differential", _trial_differential, 2 << 40),
    ("dual", _trial_dual, 3 << 40),
    ("words", _trial_words, 4 << 40),
)


def _cmd_check(args):
    failed = False
    for name, fn, base in _SUITES:
        if args.suite != "all" and args.suite != name:
            continue

        def one(i, fn=fn, base=base):
            stream = Stream(trial_seed(args.seed, base + i))
            try:
                return fn(stream, args.max_boxes, args.max_entry)
            except Exception as e:
                return "raised %r" % (e,)

        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(one, range(args.trials)))
        bad = [(i, msg) for i, msg in enumerate(results) if msg]
        if bad:
            failed = True
            i, msg = bad[0]
            print("%s: FAIL (%d of %d trials; first at %d: %s)"
                  % (name, len(bad), args.trials, i, msg))
        else:
            print("%s: %d trials ok" % (name, args.trials))
    return 2 if failed else 0


# ---------------------------------------------------------------------------
# commands

def _read(path):
    with open(path) as fh:
        return fh.read()


def _cmd_rectify(args):
    f = parse_grid(sys.stdin.read())
    k = max(f.cells.values(), default=0)
    if args.trace:
        grid = render_grid(f)
        result, moves = _traced_rectify(args.algo, f, k)
        sys.stdout.write(_trace_text(args.algo, k, grid, moves, result))
        return 0
    if args.algo == "jdt":
        result = rectify(from_filling(f, k))
    elif args.algo == "row-game":
        result = row_insertion_game(f, k=k)
    elif args.algo == "col-game":
        result = column_insertion_game(f, k=k)
    elif args.algo == "row-extract":
        result = row_extraction_rectify(from_filling(f, k))
    elif args.algo == "col-extract":
        result = column_extraction_rectify(f, k)
    else:
        result = _traced_rectify("tesler", f, k)[0]
    print(render_grid(to_filling(result)))
    return 0


def _cmd_complement(args):
    t = parse_chain(sys.stdin.read())
    print(render_chain(complement(t, ComplementParams(args.k, args.l))))
    return 0


def _cmd_stable_complement(args):
    t = parse_chain(sys.stdin.read())
    if t.alphabet_size != args.k:
        raise ParameterError("chain has alphabet size %d, not %d"
                             % (t.alphabet_size, args.k))
    print(render_chain(stable_complement(t)))
    return 0


def _cmd_pair(args):
    p = parse_chain(_read(args.p))
    q = parse_chain(_read(args.q))
    if args.rule == "H":
        if args.reverse:
            raise ParameterError("the hopscotch pairing is its own reverse")
        if args.emit_diagram:
            raise ParameterError("the hopscotch pairing has no finite diagram")
        t, u = hopscotch_pair(p, q)
        print(render_chain(t))
        print(render_chain(u))
        return 0
    if args.reverse and args.rule == "J":
        raise ParameterError("the switching fill is its own reverse")
    direction = "reverse" if args.reverse else "forward"
    if args.rule in ("R", "C"):
        dg, t, u = fill_pair(q, p, LocalRule(args.rule, direction, args.l))
    else:
        dg, t, u = fill_pair(p, q, LocalRule("J"))
    if args.emit_diagram:
        for row in dg.grid:
            print(" ".join(render_shape(s) for s in row))
        return 0
    print(render_chain(t))
    print(render_chain(u))
    return 0


def _cmd_eq(args):
    a = parse_chain(_read(args.a))
    b = parse_chain(_read(args.b))
    if args.kind == "knuth":
        ok = knuth_equivalent(a, b)
    else:
        ok = dual_equivalent(a, b, args.depth)
    print("true" if ok else "false")
    return 0


def _cmd_word(args):
    print(" ".join(str(x) for x in column_word(parse_chain(_read(args.file)))))
    return 0


def _cmd_renumber(args):
    print(render_chain(standard_renumbering(parse_chain(_read(args.file)))))
    return 0


def _cmd_reversal(args):
    print(render_chain(reversal(parse_chain(_read(args.file)), args.k)))
    return 0


def _cmd_random(args):
    grids = []
    for i in range(args.count):
        stream = Stream(trial_seed(args.seed, i))
        f = random_filling(stream, args.max_rows, args.max_cols,
                           args.max_entry)
        grids.append(render_grid(f))
    print("\n\n".join(grids))
    return 0


def _cmd_replay(args):
    return _replay(sys.stdin.read())


# ---------------------------------------------------------------------------
# argument plumbing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser():
    top = _Parser(prog="taquin", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rectify", help="rectify the grid on standard input")
    p.add_argument("--algo", default="jdt",
                   choices=["jdt", "row-game", "col-game", "row-extract",
                            "col-extract", "tesler"],
                   help="rectifier; tesler plays the shift game on the"
                        " standard renumbering")
    p.add_argument("--trace", action="store_true",
                   help="print a replayable move log instead of the result")
    p.set_defaults(fn=_cmd_rectify)

    p = sub.add_parser("complement", help="complement the chain on stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_complement)

    p = sub.add_parser("stable-complement",
                       help="complement the chain on stdin against"
                            " infinitely many columns")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_stable_complement)

    p = sub.add_parser("pair", help="fill the growth diagram of two chains")
    p.add_argument("--rule", required=True, choices=["R", "C", "J", "H"])
    p.add_argument("--reverse", action="store_true")
    p.add_argument("--l", type=int, default=None,
                   help="row bound, required when reversing rule R")
    p.add_argument("--p", required=True, metavar="FILE",
                   help="column-side chain for R and C; first tableau for"
                        " J; ordinary tableau for H")
    p.add_argument("--q", required=True, metavar="FILE",
                   help="row-side chain for R and C; second tableau for J;"
                        " stable chain for H")
    p.add_argument("--emit-diagram", action="store_true")
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("eq", help="equivalence of two chains in files")
    p.add_argument("--kind", required=True, choices=["knuth", "dual"])
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_eq)

    p = sub.add_parser("word", help="column word of the chain in a file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_word)

    p = sub.add_parser("renumber",
                       help="standard renumbering of the chain in a file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_renumber)

    p = sub.add_parser("reversal", help="reversal of the chain in a file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(fn=_cmd_reversal)

    p = sub.add_parser("random", help="seeded random fillings")
    p.add_argument("--max-rows", type=int, default=5)
    p.add_argument("--max-cols", type=int, default=5)
    p.add_argument("--max-entry", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(fn=_cmd_random)

    p = sub.add_parser("check", help="seeded property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-boxes", type=int, default=8)
    p.add_argument("--max-entry", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument("--suite", default="all",
                   choices=["all", "involutions", "differential", "dual",
                            "words"])
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("replay",
                       help="re-run the trace on stdin and verify its end")
    p.set_defaults(fn=_cmd_replay)

    return top


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except ParseError as e:
        print("taquin: %s" % e, file=sys.stderr)
        return 1
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except (ParseError, TaquinError, OSError) as e:
        print("taquin: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
