import os
import sys
from os.path import dirname, abspath

sys.path.append(dirname(dirname(abspath(__file__))))

from monocover import *
from monocover.utils import *

GOLDENS = os.path.join(dirname(abspath(__file__)), 'goldens')

setloglevel('WARNING')


def sample4x4():
    """Three tiles covering the 4 x 4 board, with one doubly covered cell."""
    return Covering(RectDims(4, 4), [
        Tile(INC, 0, (2, 4, 4, 4, 4)),
        Tile(INC, 0, (1, 1, 2, 2, 3)),
        Tile(DEC, 1, (3, 3, 1, 1)),
    ])

def golden(name):
    with open(os.path.join(GOLDENS, name), encoding='utf-8') as f:
        return f.read()

def random_tile(rng, dims, direction=None):
    """A random tile fitting the rectangle, possibly on part of its domain."""
    m, n = dims
    direction = direction or rng.choice([INC, DEC])
    start = rng.randint(0, m)
    end = rng.randint(start, m)
    values = sorted(rng.randint(1, n) for _ in range(end - start + 1))
    if direction is DEC: values.reverse()
    return Tile(direction, start, values)

def random_covering(rng, dims, ntiles):
    """Random tiles topped up with horizontal strips wherever a row has a hole."""
    tiles = [random_tile(rng, dims) for _ in range(ntiles)]
    holes = ~covering_cells(Covering(dims, tiles)).mask
    for l in range(1, dims.n + 1):
        if holes[:, l-1].any():
            tiles.append(constant_tile(rng.choice([INC, DEC]), l, dims.m))
    return Covering(dims, tiles)
