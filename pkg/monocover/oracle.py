"""
Brute-force ground truth on small boards.

`min_cover_exact` runs a branch-and-bound set cover over full-domain tiles and
`max_width_exact` scans anchored coverings column by column. Neither uses the
closed forms of `formulas`, so they can certify them.
"""
from itertools import combinations_with_replacement
from .core import *
from .formulas import lemma10_width_bound
from .utils.dev import dbg, info, warn, timeit, progbar


class Oracle:
    """Boards with a side above `max_side` are searched with a warning."""
    max_side = 6

    @classmethod
    def check_size(cls, m, n):
        if min(m, n) > cls.max_side:
            warn(f'exhaustive search on {m}x{n} exceeds the intended side {cls.max_side}')


def _check_board(m, n):
    if not (isnat(m) and isnat(n)) or min(m, n) < 1:
        raise DomainError(f'the search needs a non-empty board, got {m!r} x {n!r}')
    Oracle.check_size(m, n)

def enumerate_full_domain_tiles(m, n, direction):
    """ All tiles of the given direction on the boundaries 0..m of an m x n board.

    There are C(m+n, n-1) of them, in lexicographic order of their values.
    """
    direction = Direction(direction)
    tiles = []
    for values in combinations_with_replacement(range(1, n + 1), m + 1):
        if direction is DEC: values = values[::-1]
        tiles.append(Tile(direction, 0, values))
    return tiles


def _cell_bit(k, l, m):
    # row-major: lower rows first, then lower columns
    return (l - 1) * m + (k - 1)

def _tile_mask(t, m):
    mask = 0
    for k, lo, hi in t.spans():
        for l in range(lo, hi + 1):
            mask |= 1 << _cell_bit(k, l, m)
    return mask

def _candidates(m, n, direction_filter):
    """ Full-domain tiles that are maximal under inclusion, one per cell set.

    Lowering P(0) of an increasing tile to 1 or raising P(m) to n only adds
    cells to its first or last column, so some optimal covering uses only
    tiles with P(0) = 1 and P(m) = n (P(0) = n and P(m) = 1 when decreasing).
    Every tile may be extended to the full domain beforehand.
    """
    dirs = [INC, DEC] if direction_filter is None else [Direction(direction_filter)]
    seen, tiles = set(), []
    for direction in dirs:
        lo, hi = (1, n) if direction is INC else (n, 1)
        for t in enumerate_full_domain_tiles(m, n, direction):
            if t.first != lo or t.last != hi: continue
            mask = _tile_mask(t, m)
            if mask not in seen:
                seen.add(mask)
                tiles.append((mask, t))
    return tiles


class _SetCover:
    """Depth-first search for a covering of all cells by at most `budget` tiles."""

    def __init__(self, m, n, tiles):
        self.m, self.n, self.tiles = m, n, tiles
        self.full = (1 << m * n) - 1
        self.cap = m + n - 1  # no monotonous tile has more cells
        cells = [(k, l) for l in range(1, n + 1) for k in range(1, m + 1)]
        self.covering = {c: [j for j, (mask, _) in enumerate(tiles)
                             if mask >> _cell_bit(*c, m) & 1] for c in cells}
        # the candidates of a cell never change, so the fewest-candidates
        # choice is the first uncovered cell in this fixed order
        self.order = sorted(cells, key=lambda c: (len(self.covering[c]), c[1], c[0]))
        self.failed = set()
        self.nodes = 0

    def search(self, uncovered, budget, chosen):
        self.nodes += 1
        if not uncovered: return chosen
        if budget * self.cap < bin(uncovered).count('1'): return None
        if (uncovered, budget) in self.failed: return None
        cell = next(c for c in self.order if uncovered >> _cell_bit(*c, self.m) & 1)
        for j in self.covering[cell]:
            found = self.search(uncovered & ~self.tiles[j][0], budget - 1, chosen + [j])
            if found is not None: return found
        self.failed.add((uncovered, budget))
        return None

@timeit
def min_cover_exact(m, n, direction_filter=None):
    """ The least number of monotonous tiles covering the m x n board, with a witness.

    Budgets p = 1, 2, ... are tried in turn, so the minimum is certified by the
    exhausted search at p-1. With `direction_filter` only tiles of that
    direction are used.
    """
    _check_board(m, n)
    dims = RectDims(m, n)
    solver = _SetCover(m, n, _candidates(m, n, direction_filter))
    for p in progbar(range(1, min(m, n) + 1), unit='budget'):
        found = solver.search(solver.full, p, [])
        dbg(f'{m}x{n}: budget {p} {"met" if found else "exhausted"} after {solver.nodes} nodes')
        if found is not None:
            c = Covering(dims, [solver.tiles[j][1] for j in found])
            assert is_covering(c), f'witness {c} does not cover'
            info(f'min cover of {dims}: {p} tiles')
            return p, c
    raise AssertionError(f'{min(m, n)} strips always cover {dims}')


class _ColumnScan:
    """ Anchored (i, d)-coverings of height n, one column boundary at a time.

    A state holds the sorted values of the increasing and of the decreasing
    tiles at a boundary. Pairing old and new values in sorted order loses no
    covering: two crossed pairs cover the same rows after uncrossing.
    """

    def __init__(self, n, i, d):
        self.n, self.i, self.d = n, i, d
        self.full = (1 << n) - 1
        self.rows = [[0] * (n + 2) for _ in range(n + 2)]
        for lo in range(1, n + 1):
            for hi in range(lo, n + 1):
                self.rows[lo][hi] = ((1 << hi) - 1) ^ ((1 << lo - 1) - 1)
        self._moves = {}
        # the left edge can be anchored at rows 1..i and n-d+1..n
        self.start = (tuple(range(1, i + 1)), tuple(range(n - d + 1, n + 1)))

    def moves(self, values, up):
        """Next sorted values paired in order with `values`, with the rows they cover."""
        key = (values, up)
        if key not in self._moves:
            out = []
            def extend(j, nxt, mask):
                if j == len(values):
                    out.append((tuple(nxt), mask))
                    return
                a = values[j]
                if up:
                    options = range(max(a, nxt[-1] if nxt else 1), self.n + 1)
                else:
                    options = range(nxt[-1] if nxt else 1, a + 1)
                for b in options:
                    lo, hi = (a, b) if up else (b, a)
                    extend(j + 1, nxt + [b], mask | self.rows[lo][hi])
            extend(0, [], 0)
            self._moves[key] = out
        return self._moves[key]

    def step(self, states):
        """The states reachable through one more fully covered column, with their parents."""
        nxt = {}
        for state in states:
            inc, dec = state
            dec_moves = self.moves(dec, False)
            for a, mask in self.moves(inc, True):
                for b, mask2 in dec_moves:
                    if mask | mask2 == self.full and (a, b) not in nxt:
                        nxt[a, b] = state
        return nxt

    def witness(self, layers, last):
        """Rebuilds the tiles from the parent links ending at `last`."""
        path = [last]
        for layer in reversed(layers):
            path.append(layer[path[-1]])
        path.reverse()
        tiles = [Tile(INC, 0, [s[0][j] for s in path]) for j in range(self.i)]
        tiles += [Tile(DEC, 0, [s[1][k] for s in path]) for k in reversed(range(self.d))]
        return Covering(RectDims(len(path) - 1, self.n), tiles)


def _check_id(n, i, d):
    for a in (n, i, d):
        if not isnat(a):
            raise DomainError(f'expected a natural number, got {a!r}')
    if i + d > n:
        raise DomainError(f'{i} + {d} tiles exceed the height {n}')

@timeit
def exists_id_covering(m, n, i, d):
    """ Some (i, d)-covering of the m x n board, or None when there is none.

    Only coverings anchored at the left edge are searched: every (i, d)-covering
    can be rewritten into one without changing the rectangle or the tile counts.
    """
    _check_id(n, i, d)
    _check_board(m, n)
    scan = _ColumnScan(n, i, d)
    states, layers = {scan.start: None}, []
    for k in range(m):
        states = scan.step(states)
        if not states:
            dbg(f'no ({i},{d})-covering of height {n} reaches column {k+1}')
            return None
        layers.append(states)
    c = scan.witness(layers, min(states))
    assert is_covering(c) and (c.i, c.d) == (i, d), f'witness {c} is invalid'
    return c

@timeit
def max_width_exact(n, i, d):
    """ The largest width of an (i, d)-covering of height n, found by exhaustive search.

    Unbounded when i+d = n; otherwise the scan stops at the first width no
    anchored covering reaches, which the counting bound caps.
    """
    _check_id(n, i, d)
    if i + d == n: return UNBOUNDED
    bound = lemma10_width_bound(n, i, d)
    scan = _ColumnScan(n, i, d)
    states = {scan.start: None}
    for w in progbar(range(1, bound + 2), unit='column'):
        states = scan.step(states)
        dbg(f'height {n}, ({i},{d}): {len(states)} states at width {w}')
        if not states:
            info(f'max width of an ({i},{d})-covering of height {n}: {w-1}')
            return ExtNat(w - 1)
    raise AssertionError(f'an ({i},{d})-covering of height {n} is wider than {bound}')
