import io
import numpy as np
import svgwrite
from .core import overlap_counts


def ascii_render(c):
    """ The covering as text, top row first.

    Each cell shows the 1-based index of the tile covering it, '*' when
    several tiles cover it and '.' when none does.
    """
    m, n = c.dims
    counts = overlap_counts(c)
    owner = np.zeros((m, n), dtype=int)
    for idx, t in enumerate(c.tiles, 1):
        for k, lo, hi in t.spans():
            owner[k-1, lo-1:hi] = idx
    width = len(str(len(c.tiles)))
    sep = '' if width == 1 else ' '
    def field(k, l):
        if counts[k, l] == 0: s = '.'
        elif counts[k, l] > 1: s = '*'
        else: s = str(owner[k, l])
        return s.rjust(width)
    return ''.join(sep.join(field(k, l) for k in range(m)) + '\n'
                   for l in reversed(range(n)))


class SvgStyle:
    cell = 40          # pixels per unit cell, even
    margin = 20
    stroke_width = 6
    grid_stroke = '#999999'
    dot_radius = 6

PALETTE = ('#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd',
           '#8c564b', '#e377c2', '#17becf', '#bcbd22', '#7f7f7f')

def tile_color(idx):
    return PALETTE[idx % len(PALETTE)]

def turning_points(t):
    """The cell centres (column, row) where the path through the tile turns."""
    pts = []
    for k, _, _ in t.spans():
        a, b = t(k - 1), t(k)
        for p in ((k, a), (k, b)):
            if not pts or pts[-1] != p:
                pts.append(p)
    out = []
    for p in pts:
        if len(out) >= 2 and (out[-2][0] == out[-1][0] == p[0] or out[-2][1] == out[-1][1] == p[1]):
            out[-1] = p
        else:
            out.append(p)
    return out

def svg_render(c, style=SvgStyle):
    """ An SVG document with the grid and one path per tile through the cell centres.

    The output only depends on the covering and the style.
    """
    m, n = c.dims
    s, mg = style.cell, style.margin
    def xy(k, l):  # centre of the cell S(k, l), y pointing down
        return mg + k * s - s // 2, mg + (n - l) * s + s // 2

    dwg = svgwrite.Drawing(size=(m * s + 2 * mg, n * s + 2 * mg), profile='full', debug=False)
    grid = dwg.add(dwg.g(id='grid', stroke=style.grid_stroke, fill='none'))
    for x in range(m + 1):
        grid.add(dwg.line(start=(mg + x * s, mg), end=(mg + x * s, mg + n * s)))
    for y in range(n + 1):
        grid.add(dwg.line(start=(mg, mg + y * s), end=(mg + m * s, mg + y * s)))
    tiles = dwg.add(dwg.g(id='tiles', fill='none', stroke_linecap='round', stroke_linejoin='round'))
    for idx, t in enumerate(c.tiles):
        color = tile_color(idx)
        pts = [xy(*p) for p in turning_points(t)]
        if not pts: continue  # no columns
        if len(pts) == 1:
            tiles.add(dwg.circle(center=pts[0], r=style.dot_radius, fill=color))
        else:
            tiles.add(dwg.polyline(pts, stroke=color, stroke_width=style.stroke_width))
    buf = io.StringIO()
    dwg.write(buf)
    return buf.getvalue()
