"""
JSON form of a covering:

    {"m": 4, "n": 4, "tiles": [{"dir": "inc", "start": 0, "values": [2, 4, 4, 4, 4]}, ...]}

Decoding is strict: unknown or missing fields, booleans posing as numbers,
non-monotone values and tiles leaving the rectangle are all rejected.
"""
import json
from .core import *

FIELDS = {'m', 'n', 'tiles'}
TILE_FIELDS = {'dir', 'start', 'values'}


def tile_record(t):
    return {'dir': t.direction.value, 'start': t.start, 'values': list(t.values)}

def tile_to_json(t):
    return json.dumps(tile_record(t), separators=(',', ':'))

def covering_to_json(c):
    data = {'m': c.dims.m, 'n': c.dims.n, 'tiles': [tile_record(t) for t in c.tiles]}
    return json.dumps(data, separators=(',', ':'))

def _isint(x):
    return isinstance(x, int) and not isinstance(x, bool)

def _fields(obj, expected, where):
    if not isinstance(obj, dict):
        raise ParseError(f'{where}: expected an object, got {type(obj).__name__}')
    if set(obj) != expected:
        unknown, missing = set(obj) - expected, expected - set(obj)
        raise ParseError(f'{where}: unknown fields {sorted(unknown)}, missing fields {sorted(missing)}')

def _tile(obj, idx, dims):
    where = f'tile {idx}'
    _fields(obj, TILE_FIELDS, where)
    if obj['dir'] not in ('inc', 'dec'):
        raise ParseError(f'{where}: direction must be "inc" or "dec", got {obj["dir"]!r}')
    if not _isint(obj['start']):
        raise ParseError(f'{where}: start must be an integer, got {obj["start"]!r}')
    values = obj['values']
    if not isinstance(values, list) or not all(map(_isint, values)):
        raise ParseError(f'{where}: values must be a list of integers')
    try:
        t = Tile(obj['dir'], obj['start'], values)
        t.check_fits(dims, idx)
    except CoverError as e:
        raise ParseError(f'{where}: {e}') from e
    return t

def covering_from_json(text):
    """Parses and validates a covering; a ParseError names the offending tile."""
    if isinstance(text, bytes):
        try: text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise ParseError(f'input is not UTF-8: {e}') from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f'malformed JSON: {e}') from e
    _fields(data, FIELDS, 'covering')
    m, n, tiles = data['m'], data['n'], data['tiles']
    if not (_isint(m) and _isint(n) and m >= 0 and n >= 0):
        raise ParseError(f'covering: m and n must be natural numbers, got {m!r} and {n!r}')
    if not isinstance(tiles, list):
        raise ParseError('covering: tiles must be a list')
    dims = RectDims(m, n)
    return Covering(dims, [_tile(obj, idx, dims) for idx, obj in enumerate(tiles)])
