"""
Rewriting rules for tiles that never shrink the covered region and never add tiles.

Increasing tiles are peeled from the top (`peel_top`, `canonical_top`), merged
pairwise into a lower and an upper tile (`merge_pair`) and made pairwise
disjoint (`disentangle`). Decreasing tiles go through the same rules upside
down. `normalize_left` uses all of them to pin the left ends of a covering.
"""
from .core import *
from .core import mirror_tile
from .utils.dev import dbg


def _increasing_full(tiles, dims):
    out = []
    for t in tiles:
        if not is_monotone(t.values, INC):
            raise PreconditionError(f'tile {t} is not increasing')
        t.check_fits(dims)
        t = extend_to_full_domain(t, dims.m)
        out.append(t if t.direction is INC else Tile(INC, 0, t.values))
    return out

def _dedupe(tiles):
    seen, out = set(), []
    for t in tiles:
        if t.values not in seen:
            seen.add(t.values)
            out.append(t)
    return out

def _cells_in_row(t, row):
    return sum(lo <= row <= hi for _, lo, hi in t.spans())


def peel_top(tiles, dims):
    """ Splits off the tile that owns the top row reached by the tiles.

    Returns (top, rest): with M the highest final value, `top` is the tile
    ending at M with the most cells in row M, and `rest` are the other tiles
    clipped to min{I(k), M-1}, without duplicates. Every rest tile ends below M.
    """
    if not tiles:
        raise PreconditionError('peel_top needs at least one tile')
    tiles = _dedupe(_increasing_full(tiles, dims))
    M = max(t.last for t in tiles)
    top = max((t for t in tiles if t.last == M), key=lambda t: _cells_in_row(t, M))
    if M == 1: return top, []
    rest = [Tile(INC, 0, tuple(min(v, M - 1) for v in t.values))
            for t in tiles if t is not top]
    return top, _dedupe(rest)

def canonical_top(tiles, dims):
    """Full-domain increasing tiles with strictly decreasing final values covering the input."""
    out = []
    while tiles:
        top, tiles = peel_top(tiles, dims)
        out.append(top)
    return out

def merge_pair(I, J):
    """ Replaces two crossing increasing tiles by a lower tile L and an upper tile U.

    L(k) = min{I(k), J(k)}; U(k) = max{I(k), J(k), min{I(k+1), J(k+1)} + 1}
    for k < m and U(m) = max{I(m), J(m)}. L stays strictly below U:
    L(k) < U(k-1) for k = 1..m.
    """
    if I.start != 0 or J.start != 0 or len(I.values) != len(J.values):
        raise PreconditionError('merge_pair needs two full-domain tiles on the same domain')
    if I.last == J.last:
        raise PreconditionError(f'both tiles end at row {I.last}')
    a, b = I.values, J.values
    m = len(a) - 1
    low = [min(x, y) for x, y in zip(a, b)]
    up = [max(a[k], b[k], min(a[k+1], b[k+1]) + 1) for k in range(m)] + [max(a[m], b[m])]
    return Tile(INC, 0, low), Tile(INC, 0, up)

def disentangle(tiles, dims):
    """ Pairwise disjoint full-domain increasing tiles covering the input, bottom to top.

    Each sweep merges the lowest remaining tile with all the others in turn;
    the pointwise minimum it leaves behind is the next output tile.
    """
    pending = canonical_top(tiles, dims)[::-1]
    out = []
    while pending:
        low, uppers = pending[0], []
        for t in pending[1:]:
            low, up = merge_pair(low, t)
            uppers.append(up)
        out.append(low)
        pending = uppers
    return out

def disentangle_decreasing(tiles, dims):
    """The mirror image of `disentangle`: disjoint decreasing tiles, top to bottom."""
    flipped = disentangle([mirror_tile(t, dims.n) for t in tiles], dims)
    return [mirror_tile(t, dims.n) for t in flipped]


def _anchored(tiles, count, m):
    """Sets I_j(0) = j on disjoint tiles ordered bottom to top and pads with constants."""
    out = []
    for j, t in enumerate(tiles, 1):
        assert t.first >= j, f'tile {t} starts below row {j}'
        out.append(Tile(INC, 0, (j,) + t.values[1:]))
    out += [constant_tile(INC, j, m) for j in range(len(tiles) + 1, count + 1)]
    return out

def normalize_left(c, i=None, d=None):
    """ Rewrites a covering into an anchored (i, d)-covering of the same rectangle.

    The result has i increasing tiles with I_j(0) = j and d decreasing tiles
    with D_k(0) = n+1-k, all on the full domain, increasing ones first.
    Missing tiles are filled in as constant rows.
    """
    m, n = c.dims
    i = c.i if i is None else i
    d = c.d if d is None else d
    if i + d > n:
        raise DomainError(f'{i} + {d} tiles exceed the height {n}')
    if c.i > i or c.d > d:
        raise PreconditionError(f'a ({c.i},{c.d})-covering cannot be normalized to ({i},{d})')
    if not is_covering(c):
        raise PreconditionError(f'not a covering of {c.dims}')
    inc = _anchored(disentangle(c.increasing, c.dims), i, m)
    flipped = [mirror_tile(t, n) for t in c.decreasing]
    dec = [mirror_tile(t, n) for t in _anchored(disentangle(flipped, c.dims), d, m)]
    out = Covering(c.dims, inc + dec)
    dbg('normalized %s to %s', c, out)
    return out

def is_anchored(c):
    m, n = c.dims
    inc, dec = c.increasing, c.decreasing
    return (all(t.is_full(m) for t in c.tiles)
            and sorted(t.first for t in inc) == list(range(1, len(inc) + 1))
            and sorted(t.first for t in dec) == list(range(n - len(dec) + 1, n + 1)))

def crossing_violations(c):
    """Pairs (I, D) of full-domain tiles that fail I(0) < D(0) and I(m) > D(m)."""
    return [(I, D) for I in c.increasing for D in c.decreasing
            if not (I.first < D.first and I.last > D.last)]
