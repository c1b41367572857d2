"""
Closed forms for minimal coverings by monotonous polyominoes.

Everything is evaluated in exact integer arithmetic. The square-root form of
p(m, n) is kept only as `p_sqrt_form`, a high-precision cross-check.

>>> p_of(4, 4), m_of(4, 3), m_of(5, 5)
(3, ExtNat(5), UNBOUNDED)
"""
import numpy as np
from math import isqrt
from decimal import Decimal, localcontext, ROUND_CEILING
from .core import ExtNat, UNBOUNDED, DomainError, PreconditionError, isnat


def _check_nat(*args):
    for a in args:
        if not isnat(a):
            raise DomainError(f'expected a natural number, got {a!r}')

def _quadratic(m, n, p):
    return 3*p*p - 4*(m + n)*p + 4*m*n

def p_of(m, n):
    """ Least number of monotonous polyominoes covering the m x n rectangle.

    This is the least p with 3p^2 - 4(m+n)p + 4mn <= 0, the integer form of
    ceil(2/3 (m + n - sqrt(m^2 + n^2 - mn))). The result never exceeds min{m, n}.
    """
    _check_nat(m, n)
    if min(m, n) == 0: return 0
    s = isqrt(m*m + n*n - m*n)
    p = max(0, (2*(m + n) - 2*s - 2) // 3)  # at most the smaller root
    while _quadratic(m, n, p) > 0:
        p += 1
    return p

def balanced_split(p):
    """The (i, d) split of p tiles that maximizes i*d."""
    return (p + 1) // 2, p // 2

def m_of_id(n, i, d):
    """ Maximal width of an n-high rectangle with an (i, d)-covering.

    i + d + floor(id / (n - i - d)), unbounded when i + d = n.
    """
    _check_nat(n, i, d)
    e = n - i - d
    if e < 0:
        raise DomainError(f'{i} + {d} tiles exceed the height {n}')
    if e == 0: return UNBOUNDED
    return ExtNat(i + d + i*d // e)

def m_of(n, p):
    """ Maximal width of an n-high rectangle covered by p monotonous polyominoes.

    p + floor(p^2 / (4(n - p))) for p < n, unbounded otherwise.
    """
    _check_nat(n, p)
    if p >= n: return UNBOUNDED
    closed = p + p*p // (4*(n - p))
    balanced = m_of_id(n, *balanced_split(p))
    assert balanced == closed, f'm({n},{p}): closed form {closed} != balanced split {balanced}'
    return ExtNat(closed)

def tilde_m(e, i, d):
    """m(e+i+d, i, d): the maximal width when the height exceeds i+d by e."""
    _check_nat(e, i, d)
    return m_of_id(e + i + d, i, d)

def trivial_is_minimal(m, n):
    """Whether the n horizontal strips are a minimum covering of the m x n rectangle (m >= n >= 1)."""
    _check_nat(m, n)
    if not m >= n >= 1:
        raise PreconditionError(f'needs m >= n >= 1, got m={m}, n={n}')
    return 4*(m + 1) > (n + 1)**2

def lemma10_width_bound(n, i, d):
    """ Counting bound on the width of any (i, d)-covering of height n.

    Each tile has at most m+n-1 cells, so mn <= (i+d)(m+n-1).
    """
    _check_nat(n, i, d)
    if i + d >= n:
        raise DomainError(f'the width bound needs i + d < n, got {i} + {d} >= {n}')
    return (i + d)*(n - 1) // (n - i - d)

def increasing_only_min(m, n):
    _check_nat(m, n)
    return min(m, n)

def p_sqrt_form(m, n, digits=60):
    """ceil(2/3 (m + n - sqrt(m^2 + n^2 - mn))) evaluated with `digits` decimal digits."""
    _check_nat(m, n)
    if min(m, n) == 0: return 0
    with localcontext() as ctx:
        ctx.prec = digits
        root = Decimal(m*m + n*n - m*n).sqrt()
        value = 2 * (Decimal(m + n) - root) / 3
        return int(value.to_integral_value(rounding=ROUND_CEILING))

def p_table(pmax):
    """p(m, n) for 1 <= m, n <= pmax, indexed [m-1, n-1]."""
    _check_nat(pmax)
    return np.array([[p_of(m, n) for n in range(1, pmax + 1)]
                     for m in range(1, pmax + 1)], dtype=int).reshape(pmax, pmax)
