from importer import *
import random
from fractions import Fraction

# straight lines crossing a board, turned into tiles

random.seed(3)
n, lines = 6, 4

def random_line(n):
    while True:
        slope = Fraction(random.randint(-3 * n, 3 * n), random.randint(1, 2 * n))
        intercept = Fraction(random.randint(1, 4 * n * n), 4 * n)
        try:
            tile_from_line(slope, intercept, 0, 1, RectDims(n, n))
            return slope, intercept
        except CoverError:
            continue

def longest_tile(slope, intercept, dims):
    """The tile of the longest segment of the line starting at x = 0 that stays on the board."""
    best = None
    for x1 in range(1, dims.m + 1):
        try: best = tile_from_line(slope, intercept, 0, x1, dims)
        except CoverError: break
    return best

tiles = []
for _ in range(lines):
    slope, intercept = random_line(n)
    t = longest_tile(slope, intercept, RectDims(n, n))
    info(f'y = {slope} x + {intercept}: {t}')
    tiles.append(extend_to_full_domain(t, n))

c = Covering(RectDims(n, n), tiles)
print(ascii_render(c))
print(f'{lines} lines {"cover" if is_covering(c) else "do not cover"} the {n}x{n} board; '
      f'p({n},{n}) = {p_of(n, n)}')
