"""
Lattice rectangles, monotonous tiles and their coverings.

Cells are 1-based: S(k, l) is the unit square [k-1, k] x [l-1, l], column k,
row l. A tile is stored by its boundary values P(r-1), ..., P(s) on the column
boundaries r-1..s; its part in column t is the row range between P(t-1) and P(t).

>>> D = Tile('dec', 1, (3, 3, 1, 1))
>>> sorted(tile_cells(D, RectDims(4, 4)))
[(2, 3), (3, 1), (3, 2), (3, 3), (4, 1)]
>>> tile_size(D)
5
"""
import math
import numpy as np
from enum import Enum
from numbers import Integral
from fractions import Fraction
from functools import total_ordering
from dataclasses import dataclass
from typing import Iterator, Tuple


class CoverError(ValueError):
    """Baseclass of the errors raised by monocover."""

class DimensionError(CoverError):
    """A tile, cell or line does not fit the rectangle."""

class DegenerateLineError(CoverError):
    """A line takes an integer value at an integer abscissa."""

class PreconditionError(CoverError):
    """An operation was called outside its precondition."""

class DomainError(CoverError):
    """The requested quantity is undefined for these arguments."""

class InfeasibleError(CoverError):
    """No covering with the requested parameters exists."""

class ParseError(CoverError):
    """A serialized covering was rejected."""


def isnat(x):
    return isinstance(x, Integral) and not isinstance(x, bool) and x >= 0


@dataclass(frozen=True)
class RectDims:
    """The rectangle [0, m] x [0, n]; empty iff min{m, n} = 0."""
    m: int
    n: int

    def __post_init__(self):
        if not (isnat(self.m) and isnat(self.n)):
            raise DimensionError(f'invalid rectangle {self.m!r} x {self.n!r}')
        object.__setattr__(self, 'm', int(self.m))
        object.__setattr__(self, 'n', int(self.n))

    @property
    def empty(self): return min(self.m, self.n) == 0

    @property
    def area(self): return self.m * self.n

    def __iter__(self):
        yield self.m
        yield self.n

    def __str__(self): return f'{self.m}x{self.n}'


class Direction(str, Enum):
    INC = 'inc'
    DEC = 'dec'

    @property
    def flipped(self):
        return Direction.DEC if self is Direction.INC else Direction.INC

INC, DEC = Direction.INC, Direction.DEC


def is_monotone(values, direction):
    pairs = zip(values, values[1:])
    if Direction(direction) is INC:
        return all(a <= b for a, b in pairs)
    return all(a >= b for a, b in pairs)


@dataclass(frozen=True)
class Tile:
    """ A monotonous polyomino as a monotone function on column boundaries.

    Attributes:
    - direction: INC or DEC; a constant tile is valid under either tag
    - start: the first boundary r-1 of the domain
    - values: P(r-1), ..., P(s), rows in 1..n
    """
    direction: Direction
    start: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'direction', Direction(self.direction))
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))
        if not isnat(self.start):
            raise PreconditionError(f'tile start must be a natural number, got {self.start!r}')
        if not self.values:
            raise PreconditionError('a tile needs at least one boundary value')
        if not is_monotone(self.values, self.direction):
            raise PreconditionError(f'values {list(self.values)} are not '
                                    f'monotone in direction {self.direction.value}')

    @property
    def end(self): return self.start + len(self.values) - 1

    @property
    def first(self): return self.values[0]

    @property
    def last(self): return self.values[-1]

    def __call__(self, k):
        """The boundary value P(k)."""
        if not self.start <= k <= self.end:
            raise DimensionError(f'boundary {k} outside the domain {self.start}..{self.end}')
        return self.values[k - self.start]

    def spans(self) -> Iterator[Tuple[int, int, int]]:
        """Yields (column, lowest row, highest row) for each column of the tile."""
        for t in range(1, len(self.values)):
            a, b = self.values[t-1], self.values[t]
            yield self.start + t, min(a, b), max(a, b)

    def is_full(self, m):
        return self.start == 0 and self.end == m

    def fits(self, dims):
        return self.end <= dims.m and all(1 <= v <= dims.n for v in self.values)

    def check_fits(self, dims, index=None):
        if not self.fits(dims):
            name = 'tile' if index is None else f'tile {index}'
            raise DimensionError(f'{name} {self} does not fit the rectangle {dims}')

    def __str__(self):
        return f'{self.direction.value}@{self.start}{list(self.values)}'


def constant_tile(direction, row, m):
    return Tile(direction, 0, (row,) * (m + 1))


class CellSet:
    """ Membership of the cells S(k, l), 1 <= k <= m, 1 <= l <= n.

    The mask is a read-only boolean array of shape (m, n) indexed [k-1, l-1].
    Queries outside the rectangle raise DimensionError.
    """

    def __init__(self, dims, mask=None):
        self.dims = dims
        if mask is None:
            mask = np.zeros((dims.m, dims.n), dtype=bool)
        else:
            mask = np.array(mask, dtype=bool)
        if mask.shape != (dims.m, dims.n):
            raise DimensionError(f'mask of shape {mask.shape} for rectangle {dims}')
        mask.flags.writeable = False
        self.mask = mask

    @classmethod
    def from_cells(cls, dims, cells):
        mask = np.zeros((dims.m, dims.n), dtype=bool)
        empty = cls(dims)
        for cell in cells:
            mask[empty._index(cell)] = True
        return cls(dims, mask)

    @classmethod
    def full(cls, dims):
        return cls(dims, np.ones((dims.m, dims.n), dtype=bool))

    def _index(self, cell):
        k, l = cell
        if not (1 <= k <= self.dims.m and 1 <= l <= self.dims.n):
            raise DimensionError(f'cell S({k},{l}) outside the rectangle {self.dims}')
        return k - 1, l - 1

    def _other(self, other):
        if not isinstance(other, CellSet): return None
        if other.dims != self.dims:
            raise DimensionError(f'cell sets of {self.dims} and {other.dims}')
        return other.mask

    def __contains__(self, cell):
        return bool(self.mask[self._index(cell)])

    def __len__(self): return int(self.mask.sum())

    def __iter__(self):
        for k, l in np.argwhere(self.mask):
            yield int(k) + 1, int(l) + 1

    def column(self, k):
        """The rows of the members in column k."""
        if not 1 <= k <= self.dims.m:
            raise DimensionError(f'column {k} outside the rectangle {self.dims}')
        return [int(l) + 1 for l in np.flatnonzero(self.mask[k-1])]

    @property
    def is_full(self): return bool(self.mask.all())

    def __or__(self, other):
        mask = self._other(other)
        return NotImplemented if mask is None else CellSet(self.dims, self.mask | mask)

    def __and__(self, other):
        mask = self._other(other)
        return NotImplemented if mask is None else CellSet(self.dims, self.mask & mask)

    def __sub__(self, other):
        mask = self._other(other)
        return NotImplemented if mask is None else CellSet(self.dims, self.mask & ~mask)

    def __le__(self, other):
        mask = self._other(other)
        return NotImplemented if mask is None else not (self.mask & ~mask).any()

    def __ge__(self, other):
        mask = self._other(other)
        return NotImplemented if mask is None else not (mask & ~self.mask).any()

    def __eq__(self, other):
        if not isinstance(other, CellSet): return NotImplemented
        return self.dims == other.dims and np.array_equal(self.mask, other.mask)

    def __hash__(self): return hash((self.dims, self.mask.tobytes()))

    def isdisjoint(self, other):
        return not (self.mask & self._other(other)).any()

    def __repr__(self):
        return f'CellSet({self.dims}, {len(self)} cells)'


@dataclass(frozen=True)
class Covering:
    """ A rectangle and the tiles claimed to cover it.

    The class counts i, d come from the direction tags.
    """
    dims: RectDims
    tiles: Tuple[Tile, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'tiles', tuple(self.tiles))
        for idx, t in enumerate(self.tiles):
            t.check_fits(self.dims, idx)

    @property
    def increasing(self): return [t for t in self.tiles if t.direction is INC]

    @property
    def decreasing(self): return [t for t in self.tiles if t.direction is DEC]

    @property
    def i(self): return len(self.increasing)

    @property
    def d(self): return len(self.decreasing)

    def __len__(self): return len(self.tiles)

    def __iter__(self): return iter(self.tiles)

    def __str__(self):
        return f'({self.i},{self.d})-covering of {self.dims}'


@total_ordering
class ExtNat:
    """ A natural number or the unbounded value.

    Unbounded compares greater than every finite value. There is no
    arithmetic; take `int()` of a finite value first.
    """
    __slots__ = ('_value',)

    def __init__(self, value=None):
        if value is not None and not isnat(value):
            raise DomainError(f'not a natural number: {value!r}')
        self._value = None if value is None else int(value)

    @property
    def finite(self): return self._value is not None

    @property
    def value(self):
        if self._value is None:
            raise DomainError('the unbounded value has no finite value')
        return self._value

    def __int__(self): return self.value

    @staticmethod
    def _key(x):
        if isinstance(x, ExtNat):
            return (0, x._value) if x.finite else (1, 0)
        if isnat(x):
            return (0, int(x))
        return None

    def __eq__(self, other):
        key = self._key(other)
        return NotImplemented if key is None else self._key(self) == key

    def __lt__(self, other):
        key = self._key(other)
        return NotImplemented if key is None else self._key(self) < key

    def __hash__(self):
        return hash(self._value) if self.finite else hash(math.inf)

    def __repr__(self):
        return f'ExtNat({self._value})' if self.finite else 'UNBOUNDED'

    def __str__(self):
        return str(self._value) if self.finite else 'inf'

UNBOUNDED = ExtNat()


### cell-level semantics ###

def paint(mask, tile, count=False):
    """Marks the cells of the tile in an (m, n) array."""
    for k, lo, hi in tile.spans():
        if count: mask[k-1, lo-1:hi] += 1
        else: mask[k-1, lo-1:hi] = True
    return mask

def tile_cells(t, dims):
    t.check_fits(dims)
    return CellSet(dims, paint(np.zeros((dims.m, dims.n), dtype=bool), t))

def tile_size(t):
    """Number of cells: one per column plus the vertical travel."""
    return len(t.values) - 1 + abs(t.last - t.first)

def overlap_counts(c):
    """How many tiles cover each cell, as an (m, n) int array."""
    counts = np.zeros((c.dims.m, c.dims.n), dtype=int)
    for t in c.tiles:
        paint(counts, t, count=True)
    return counts

def covering_cells(c):
    mask = np.zeros((c.dims.m, c.dims.n), dtype=bool)
    for t in c.tiles:
        paint(mask, t)
    return CellSet(c.dims, mask)

def is_covering(c):
    return covering_cells(c).is_full


def tile_from_line(slope, intercept, x0, x1, dims):
    """ The tile of the cells met by the graph of y = slope*x + intercept on [x0, x1].

    Args:
    - slope, intercept: rationals (Fraction, int or "a/b" strings)
    - x0, x1: integer abscissae with 0 <= x0 < x1 <= m

    The value at every integer abscissa must be a non-integer inside (0, n).
    """
    slope, intercept = Fraction(slope), Fraction(intercept)
    if x1 <= x0:
        raise PreconditionError(f'empty segment [{x0}, {x1}]')
    if x0 < 0 or x1 > dims.m:
        raise DimensionError(f'segment [{x0}, {x1}] leaves the rectangle {dims}')
    values = []
    for k in range(x0, x1 + 1):
        y = slope * k + intercept
        if y.denominator == 1:
            raise DegenerateLineError(f'the line passes through the lattice point ({k}, {y})')
        if not 0 < y < dims.n:
            raise DimensionError(f'the line leaves the rectangle {dims} at x = {k}')
        values.append(math.ceil(y))
    return Tile(INC if slope >= 0 else DEC, x0, values)


def tile_from_cells(direction, cells):
    """Rebuilds the tile of the given direction whose cells are exactly `cells`."""
    direction, mask = Direction(direction), cells.mask
    cols = np.flatnonzero(mask.any(axis=1))
    if not len(cols):
        raise PreconditionError('no cells to build a tile from')
    if cols[-1] - cols[0] != len(cols) - 1:
        raise PreconditionError('cells are not in consecutive columns')
    lows, highs = [], []
    for c in cols:
        rows = np.flatnonzero(mask[c])
        if rows[-1] - rows[0] != len(rows) - 1:
            raise PreconditionError(f'column {c+1} is not a contiguous row range')
        lows.append(int(rows[0]) + 1)
        highs.append(int(rows[-1]) + 1)
    if direction is INC:
        values, joins = [lows[0]] + highs, zip(lows[1:], highs)
    else:
        values, joins = [highs[0]] + lows, zip(highs[1:], lows)
    if any(a != b for a, b in joins):
        raise PreconditionError(f'cells do not form a {direction.value} staircase')
    return Tile(direction, int(cols[0]), values)


### transforms ###

def extend_to_full_domain(t, m):
    """Extends the tile constantly to the boundaries 0..m."""
    if t.end > m:
        raise DimensionError(f'tile {t} is wider than {m}')
    if t.is_full(m): return t
    values = (t.first,) * t.start + t.values + (t.last,) * (m - t.end)
    return Tile(t.direction, 0, values)

def trim_covering(c, w):
    """Restricts a covering by full-domain tiles to its left-most w columns."""
    if not 0 <= w <= c.dims.m:
        raise PreconditionError(f'cannot trim width {c.dims.m} to {w}')
    if not all(t.is_full(c.dims.m) for t in c.tiles):
        raise PreconditionError('trimming needs full-domain tiles')
    tiles = [Tile(t.direction, 0, t.values[:w+1]) for t in c.tiles]
    return Covering(RectDims(w, c.dims.n), tiles)

def reflect_covering(c):
    """ Reflects across the line y = -x, moved back onto the standard rectangle.

    S(x, y) of the m x n rectangle goes to S(n+1-y, m+1-x) of the n x m one.
    Tiles keep their class; tiles without columns have no cells and are dropped.
    Reflecting twice gives back every tile's cells.
    """
    m, n = c.dims
    dims = RectDims(n, m)
    tiles = [tile_from_cells(t.direction, CellSet(dims, tile_cells(t, c.dims).mask[::-1, ::-1].T))
             for t in c.tiles if len(t.values) > 1]
    return Covering(dims, tiles)

def mirror_tile(t, n):
    return Tile(t.direction.flipped, t.start, tuple(n + 1 - v for v in t.values))

def mirror_covering(c):
    """Flips row l to n+1-l; increasing and decreasing tiles trade places."""
    return Covering(c.dims, [mirror_tile(t, c.dims.n) for t in c.tiles])
