from importer import *
import sys
from monocover.utils.graph import show_plan

# draw the construction plan of a maximal (i, d)-covering of height n

n, i, d = map(int, sys.argv[1:4]) if len(sys.argv) > 3 else (7, 3, 2)

steps = plan(n - i - d, i, d, 1 if i + d == n else None)
for step in steps:
    print(step)
show_plan(steps, f'plan_{n}_{i}_{d}')
c = execute(steps)
print(ascii_render(c))
print(f'{c} with {len(c)} tiles, width {c.dims.m}, maximal width {m_of_id(n, i, d)}')
