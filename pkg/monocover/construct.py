"""
Explicit (i, d)-coverings of maximal width and minimum coverings of any rectangle.

`cover(e, i, d)` covers the rectangle of height e+i+d and width i+d+floor(id/e)
by peeling off prefixes of d+e columns, swapping the classes upside down or
reflecting a covering of smaller height excess. `plan` lays the recursion out
as an explicit list of steps and `execute` runs them, so the call stack never
grows with the input.

>>> c = cover(1, 2, 1)
>>> c.dims, [t.values for t in c.tiles]
(RectDims(m=5, n=4), [(1, 1, 1, 1, 3, 3), (2, 2, 4, 4, 4, 4), (4, 3, 3, 2, 2, 1)])
"""
from itertools import chain, groupby
from dataclasses import dataclass
from typing import Optional
from .core import *
from .normal import normalize_left, is_anchored
from .formulas import m_of_id, p_of, balanced_split
from .utils.dev import dbg, info, timeit


@dataclass(frozen=True)
class Step:
    """ One level of the recursion behind `cover`.

    Attributes:
    - kind: 'base-strips', 'base-empty', 'prefix', 'mirror' or 'reflect'
    - e, i, d: the parameters of the covering this step returns
    - width: the requested width of a 'base-strips' step
    """
    kind: str
    e: int
    i: int
    d: int
    width: Optional[int] = None

    @property
    def height(self): return self.e + self.i + self.d

    def __str__(self):
        s = f'{self.kind}(e={self.e}, i={self.i}, d={self.d}'
        return s + (')' if self.width is None else f', width={self.width})')


def plan(e, i, d, width_request=None):
    """ The steps `cover(e, i, d)` executes, the base first and the outermost last.

    When both i >= e and d >= e a prefix is split off. The reflecting step
    hands over to height excess floor(id/e), which is smaller than e.
    """
    for a in (e, i, d):
        if not isnat(a):
            raise DomainError(f'expected a natural number, got {a!r}')
    if e == 0 and width_request is None:
        raise PreconditionError('a width is required when the height excess is 0')
    if e > 0 and width_request is not None:
        raise PreconditionError('a width can only be requested when the height excess is 0')
    stack = []
    while True:
        if e == 0:
            stack.append(Step('base-strips', e, i, d, width_request))
            break
        if i == d == 0:
            stack.append(Step('base-empty', e, i, d))
            break
        if i >= e:
            stack.append(Step('prefix', e, i, d))
            i -= e
        elif d >= e:
            stack.append(Step('mirror', e, i, d))
            i, d = d, i
        else:
            stack.append(Step('reflect', e, i, d))
            e = i * d // e
            if e == 0: width_request = i + d + stack[-1].e
    return stack[::-1]


def strips(m, n, i, d):
    """The i+d horizontal strips: increasing ones on rows 1..i, decreasing ones on rows n..n-d+1."""
    tiles = [constant_tile(INC, j, m) for j in range(1, i + 1)]
    tiles += [constant_tile(DEC, n + 1 - k, m) for k in range(1, d + 1)]
    return Covering(RectDims(m, n), tiles)

def _check_residual(e, i, d, residual):
    if not (e >= 1 and i >= e and d >= 0):
        raise PreconditionError(f'build_prefix needs i >= e >= 1, got e={e}, i={i}, d={d}')
    if residual.dims.n != i + d or residual.i != i - e or residual.d != d:
        raise PreconditionError(f'expected an ({i-e},{d})-covering of height {i+d}, got {residual}')
    if not is_anchored(residual):
        raise PreconditionError(f'the residual {residual} is not anchored')

def _prefix_run(e, d, rows, residual):
    """ Stacks the prefixes for i = rows[0], rows[0]+e, ... onto the residual.

    Each tile is kept as its value chunks, outermost chunk last, and joined
    once at the end. The output of one prefix is the anchored residual of the
    next: increasing tiles sorted by first value, decreasing ones topmost first.
    """
    w = residual.dims.m
    pre = d + e
    inc = [[t.values] for t in sorted(residual.increasing, key=lambda t: t.first)]
    dec = [[t.values] for t in sorted(residual.decreasing, key=lambda t: -t.first)]
    for i in rows:
        n = e + i + d
        for j, chunks in enumerate(inc, 1):
            chunks.append((j,) * pre)
        for t in range(1, e + 1):
            jump = d + e + 1 - t
            inc.append([(i - e + t,) * jump + (i + d + t,) * (w + t)])
        for k, chunks in enumerate(dec, 1):
            chunks.append((n + 1 - k,) * (d - k + 1) + (n + 1 - k - e,) * (e + k - 1))
        w += pre
    def join(chunks):
        return tuple(chain.from_iterable(reversed(chunks)))
    tiles = [Tile(INC, 0, join(ch)) for ch in inc] + [Tile(DEC, 0, join(ch)) for ch in dec]
    return Covering(RectDims(w, e + rows[-1] + d), tiles)

def build_prefix(e, i, d, residual):
    """ Puts d+e columns in front of an anchored (i-e, d)-covering of height i+d.

    In the new columns the decreasing tile k (topmost first) drops by e rows at
    column d+1-k, and the lifted increasing tile t (t = 1..e) jumps from row
    i-e+t to row i+d+t at column d+e+1-t. The bottom i-e increasing tiles stay
    on their rows and continue as the residual's increasing tiles.
    """
    _check_residual(e, i, d, residual)
    return _prefix_run(e, d, [i], residual)

def _increasing_first(c):
    return Covering(c.dims, c.increasing + c.decreasing)

def execute(steps):
    """ Runs a plan built by `plan` and returns the covering of its last step.

    Consecutive prefix steps share e and d and are built in one pass.
    """
    c = None
    for kind, group in groupby(steps, key=lambda s: s.kind):
        group = list(group)
        if kind == 'prefix':
            first = group[0]
            _check_residual(first.e, first.i, first.d, c)
            assert all(b.i == a.i + a.e and (b.e, b.d) == (a.e, a.d) for a, b in zip(group, group[1:]))
            c = _prefix_run(first.e, first.d, [s.i for s in group], c)
            dbg('%s .. %s -> %s', first, group[-1], c)
            continue
        for step in group:
            if kind == 'base-strips':
                c = strips(step.width, step.height, step.i, step.d)
            elif kind == 'base-empty':
                c = Covering(RectDims(0, step.e))
            elif kind == 'mirror':
                c = _increasing_first(mirror_covering(c))
            elif kind == 'reflect':
                width = step.i + step.d + step.e
                assert c.dims.m >= width, f'{c} is narrower than {width} before reflecting'
                c = normalize_left(reflect_covering(trim_covering(c, width)), step.i, step.d)
            else:
                raise ValueError(f'unknown step {kind!r}')
            dbg('%s -> %s', step, c)
    return c

def cover(e, i, d, width_request=None):
    """ An anchored (i, d)-covering of the rectangle of height e+i+d.

    Its width is i+d+floor(id/e) for e >= 1 and `width_request` for e = 0.
    """
    return execute(plan(e, i, d, width_request))


@timeit
def construct_id_covering(m, n, i, d):
    """An (i, d)-covering of the m x n rectangle, cut from a covering of maximal width."""
    if not isnat(m):
        raise DomainError(f'expected a natural width, got {m!r}')
    bound = m_of_id(n, i, d)
    if m > bound:
        raise InfeasibleError(f'no ({i},{d})-covering of {m}x{n}: the width is at most {bound}')
    e = n - i - d
    c = cover(e, i, d, m if e == 0 else None)
    return trim_covering(c, m)

@timeit
def construct_min_covering(m, n):
    """A covering of the m x n rectangle by p(m, n) monotonous polyominoes."""
    if min(m, n) == 0:
        return Covering(RectDims(m, n))
    p = p_of(m, n)
    if p == n:
        c = strips(m, n, n, 0)
    else:
        c = construct_id_covering(m, n, *balanced_split(p))
    info('covered %dx%d with %d tiles', m, n, len(c))
    return c
