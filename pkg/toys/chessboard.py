from importer import *
import sys
from math import ceil

# minimum coverings of n x n boards next to ceil(2n/3)

N = int(sys.argv[1]) if len(sys.argv) > 1 else 12

for n in progbar(range(1, N + 1), unit='board'):
    c = construct_min_covering(n, n)
    assert is_covering(c) and len(c) == ceil(2 * n / 3)
    with open(f'chessboard{n}.svg', 'w') as f:
        f.write(svg_render(c))

c = construct_min_covering(N, N)
print(ascii_render(c))
print(f'{N}x{N}: {len(c)} tiles, ({c.i},{c.d})')
