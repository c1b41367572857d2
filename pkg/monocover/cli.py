"""
Command line front end, run as `python -m monocover COMMAND ...`.

Exit codes: 0 success, 1 verification failed or unreadable covering,
2 usage error or undefined quantity, 3 infeasible request.
"""
import re
import sys
import argparse
from fractions import Fraction
from .core import CoverError, InfeasibleError, ParseError, RectDims, is_covering, tile_from_line
from .formulas import p_of, m_of, m_of_id, p_table
from .construct import construct_min_covering, construct_id_covering, plan
from .oracle import min_cover_exact, max_width_exact
from .serial import covering_to_json, covering_from_json, tile_to_json
from .render import ascii_render, svg_render
from .utils.dev import setloglevel, verbosity, progbar, error, info
from .utils.graph import plan_graph

RENDERERS = {'json': lambda c: covering_to_json(c) + '\n', 'ascii': ascii_render, 'svg': svg_render}


def integer(text):
    """A decimal integer argument: optional minus sign and ASCII digits only."""
    if not re.fullmatch(r'-?[0-9]+', text.strip()):
        raise argparse.ArgumentTypeError(f'not a decimal integer: {text!r}')
    return int(text)

def rational(text):
    """A rational argument written "a/b" or as a decimal integer."""
    match = re.fullmatch(r'(-?[0-9]+)(?:/([0-9]+))?', text.strip())
    if not match:
        raise argparse.ArgumentTypeError(f'not a rational a/b: {text!r}')
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise argparse.ArgumentTypeError(f'zero denominator: {text!r}')
    return Fraction(int(num), int(den or 1))


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        info(f'wrote {path}')

def cmd_p(args):
    print(p_of(args.m, args.n))

def cmd_width(args):
    print(m_of(args.n, args.p))

def cmd_width_id(args):
    print(m_of_id(args.n, args.i, args.d))

def cmd_cover(args):
    if args.split is None:
        c = construct_min_covering(args.m, args.n)
    else:
        c = construct_id_covering(args.m, args.n, *args.split)
    _emit(RENDERERS[args.format](c), args.output)

def cmd_verify(args):
    if args.file == '-':
        text = sys.stdin.read()
    else:
        with open(args.file, encoding='utf-8') as f:
            text = f.read()
    c = covering_from_json(text)
    if not is_covering(c):
        error(f'{c} leaves cells uncovered')
        return 1
    if args.expect_min and len(c) != p_of(*c.dims):
        error(f'{c} has {len(c)} tiles, the minimum is {p_of(*c.dims)}')
        return 1
    print(f'ok: {c} with {len(c)} tiles')

def cmd_oracle_min(args):
    count, witness = min_cover_exact(args.m, args.n, args.dir)
    print(count)
    info(ascii_render(witness).rstrip())

def cmd_oracle_width(args):
    print(max_width_exact(args.n, args.i, args.d))

def cmd_line(args):
    t = tile_from_line(args.slope, args.intercept, args.x0, args.x1, RectDims(args.m, args.n))
    print(tile_to_json(t))

def cmd_table(args):
    table = p_table(args.pmax)
    sep = ',' if args.csv else ' '
    width = 1 if args.csv else len(str(args.pmax))
    print(sep.join(['m\\n'.rjust(width)] + [str(n).rjust(width) for n in range(1, args.pmax + 1)]))
    for m, row in enumerate(progbar(table, unit='row'), 1):
        print(sep.join([str(m).rjust(width)] + [str(v).rjust(width) for v in row]))

def cmd_plan(args):
    steps = plan(args.e, args.i, args.d, args.width)
    if args.dot:
        print(plan_graph(steps).source)
    else:
        for step in steps:
            print(step)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='monocover', description='Minimal coverings of rectangles by monotonous polyominoes.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-vv for debugging output)')
    parser.add_argument('-q', '--quiet', action='store_true', help='only log errors')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('p', help='least number of tiles covering an M x N rectangle')
    p.add_argument('m', type=integer, metavar='M')
    p.add_argument('n', type=integer, metavar='N')
    p.set_defaults(func=cmd_p)

    p = sub.add_parser('width', help='maximal width coverable by P tiles at height N')
    p.add_argument('n', type=integer, metavar='N')
    p.add_argument('p', type=integer, metavar='P')
    p.set_defaults(func=cmd_width)

    p = sub.add_parser('width-id', help='maximal width of an (I, D)-covering at height N')
    p.add_argument('n', type=integer, metavar='N')
    p.add_argument('i', type=integer, metavar='I')
    p.add_argument('d', type=integer, metavar='D')
    p.set_defaults(func=cmd_width_id)

    p = sub.add_parser('cover', help='build a covering of an M x N rectangle')
    p.add_argument('m', type=integer, metavar='M')
    p.add_argument('n', type=integer, metavar='N')
    p.add_argument('--split', type=integer, nargs=2, metavar=('I', 'D'),
                   help='numbers of increasing and decreasing tiles (default: a minimum covering)')
    p.add_argument('--format', choices=sorted(RENDERERS), default='json')
    p.add_argument('-o', '--output', metavar='FILE', help='write to FILE instead of standard output')
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser('verify', help='check a JSON covering read from FILE ("-" for standard input)')
    p.add_argument('file', metavar='FILE')
    p.add_argument('--expect-min', action='store_true', help='also require the least number of tiles')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('oracle', help='exhaustive searches on small boards')
    osub = p.add_subparsers(dest='search', metavar='SEARCH')
    osub.required = True
    q = osub.add_parser('min', help='least number of tiles covering M x N')
    q.add_argument('m', type=integer, metavar='M')
    q.add_argument('n', type=integer, metavar='N')
    q.add_argument('--dir', choices=['inc', 'dec'], help='only use tiles of this direction')
    q.set_defaults(func=cmd_oracle_min)
    q = osub.add_parser('width', help='maximal width of an (I, D)-covering at height N')
    q.add_argument('n', type=integer, metavar='N')
    q.add_argument('i', type=integer, metavar='I')
    q.add_argument('d', type=integer, metavar='D')
    q.set_defaults(func=cmd_oracle_width)

    p = sub.add_parser('line', help='the tile of the cells met by y = SLOPE x + INTERCEPT on [X0, X1]',
                       description='SLOPE and INTERCEPT are rationals "a/b"; put a space '
                                   'in front of a negative value, as in " -1/2".')
    p.add_argument('slope', type=rational, metavar='SLOPE')
    p.add_argument('intercept', type=rational, metavar='INTERCEPT')
    for name in ('x0', 'x1', 'm', 'n'):
        p.add_argument(name, type=integer, metavar=name.upper())
    p.set_defaults(func=cmd_line)

    p = sub.add_parser('table', help='p(m, n) for all m, n up to PMAX')
    p.add_argument('pmax', type=integer, metavar='PMAX')
    p.add_argument('--csv', action='store_true')
    p.set_defaults(func=cmd_table)

    p = sub.add_parser('plan', help='the construction steps of a maximal (I, D)-covering')
    p.add_argument('e', type=integer, metavar='E', help='height minus I+D')
    p.add_argument('i', type=integer, metavar='I')
    p.add_argument('d', type=integer, metavar='D')
    p.add_argument('--width', type=integer, help='required when E is 0')
    p.add_argument('--dot', action='store_true', help='print graphviz source')
    p.set_defaults(func=cmd_plan)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    setloglevel(verbosity(args.verbose, args.quiet))
    try:
        return args.func(args) or 0
    except InfeasibleError as e:
        error(str(e))
        return 3
    except ParseError as e:
        error(str(e))
        return 1
    except CoverError as e:
        error(str(e))
        return 2
    except OSError as e:
        error(str(e))
        return 2
