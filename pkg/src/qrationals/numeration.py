"""Numeration systems attached to continued-fraction expansions.

An expansion a = [a_0; a_1, ..., a_{k-1}] admits digit vectors
b = (b_0, ..., b_{k-1}) subject to

    0 <= b_i <= a_i,
    i > 0 odd  and b_i = a_i ==> b_{i-1} = a_{i-1},
    i > 0 even and b_i = 0   ==> b_{i-1} = 0.

There are exactly r_k of them and the alternating valuation
val(b) = sum (-1)^i b_i r_i hits every integer of an interval of width
r_k exactly once.  Digits are stored least-significant (b_0) first.
"""

from . import cf as _cf
from .qpoly import Poly

__all__ = [
    "is_admissible",
    "enumerate_admissible",
    "is_filled",
    "partition",
    "norm1",
    "val",
    "rep",
    "z_interval",
    "norm1_statistics",
    "numeration_rows",
]


def is_admissible(b, a):
    """True iff b is an admissible digit vector for a.

    >>> is_admissible((2, 2, 1), (2, 2, 2))
    True
    >>> is_admissible((0, 1, 0, 0), (0, 1, 3, 1))
    False
    """
    a = _cf.check_cf(a)
    b = tuple(int(x) for x in b)
    if len(b) != len(a):
        raise ValueError("digit vector has length %d, expansion %d" % (len(b), len(a)))
    for bi, ai in zip(b, a):
        if not 0 <= bi <= ai:
            return False
    for i in range(1, len(a)):
        if i % 2 == 1 and b[i] == a[i] and b[i - 1] != a[i - 1]:
            return False
        if i % 2 == 0 and b[i] == 0 and b[i - 1] != 0:
            return False
    return True


def enumerate_admissible(a):
    """All admissible vectors for a, lexicographic in (b_{k-1}, ..., b_0).

    Digits are emitted ls-first; the list has exactly r_k entries.

    >>> len(enumerate_admissible((2, 2, 2)))
    17
    >>> enumerate_admissible((0, 1))
    [(0, 0), (0, 1)]
    """
    a = _cf.check_cf(a)
    out = []

    def descend(i, forced, tail):
        if i < 0:
            out.append(tuple(reversed(tail)))
            return
        choices = (forced,) if forced is not None else range(a[i] + 1)
        for bi in choices:
            if i == 0:
                below = None
            elif i % 2 == 1 and bi == a[i]:
                below = a[i - 1]
            elif i % 2 == 0 and bi == 0:
                below = 0
            else:
                below = None
            tail.append(bi)
            descend(i - 1, below, tail)
            tail.pop()

    descend(len(a) - 1, None, [])
    return out


def is_filled(b, a):
    """Membership in the distinguished half of the partition:
    either 0 < b_0, or b_0 = a_0 = 0 < b_1 = a_1."""
    a = _cf.check_cf(a)
    if a[0] > 0:
        return b[0] > 0
    return len(a) > 1 and b[1] == a[1] and a[1] > 0


def partition(a):
    """(filled, empty) sublists of enumerate_admissible(a), order kept.

    >>> [len(part) for part in partition((0, 1, 3, 1))]
    [4, 5]
    >>> [len(part) for part in partition((0, 2))]
    [1, 2]
    """
    filled, empty = [], []
    for b in enumerate_admissible(a):
        (filled if is_filled(b, a) else empty).append(b)
    return filled, empty


def norm1(b):
    return sum(b)


def val(b, a):
    """Alternating valuation sum (-1)^i b_i r_i of an admissible vector.

    >>> val((2, 2, 1), (2, 2, 2))
    3
    >>> val((2, 2, 2, 2), (2, 2, 2, 2))
    -24
    """
    a = _cf.check_cf(a)
    if not is_admissible(b, a):
        raise ValueError("%s is not admissible for %s" % (b, a))
    r = _cf.r_sequence(a)
    return sum((-1) ** i * bi * r[i + 1] for i, bi in enumerate(b))


def z_interval(a):
    """Range of val on admissible vectors, as a half-open (lo, hi).

    k odd gives [0, r_k); k even gives [r_{k-1} - r_k, r_{k-1}).

    >>> z_interval((2, 2, 2))
    (0, 17)
    >>> z_interval((2, 2, 2, 2))
    (-24, 17)
    >>> z_interval((1, 1, 1, 1, 1, 1))
    (-8, 13)
    """
    a = _cf.check_cf(a)
    k = len(a)
    r = _cf.r_sequence(a)
    if k % 2 == 1:
        return (0, r[k + 1])
    return (r[k] - r[k + 1], r[k])


def rep(n, a):
    """The unique admissible vector with val(rep(n, a)) = n.

    Digits are extracted most-significant first, alternating the two
    quotient steps of the existence induction: at odd i take
    b_i = -floor(n / r_i) and keep the remainder mod r_i, at even i take
    b_i = floor((n - (r_{i-1} - r_i)) / r_i) and subtract b_i r_i.

    >>> rep(10, (2, 2, 2))
    (2, 2, 2)
    >>> rep(-8, (1, 1, 1, 1, 1, 1))
    (1, 1, 1, 1, 1, 1)
    >>> rep(0, (2, 2, 2, 2))
    (0, 0, 0, 0)
    """
    a = _cf.check_cf(a)
    lo, hi = z_interval(a)
    if not lo <= n < hi:
        raise ValueError("%d outside [%d, %d)" % (n, lo, hi))
    r = _cf.r_sequence(a)
    m = n
    digits = [0] * len(a)
    for i in range(len(a) - 1, -1, -1):
        ri = r[i + 1]
        if i % 2 == 1:
            digits[i] = -(m // ri)
            m %= ri
        else:
            digits[i] = (m - (r[i] - ri)) // ri
            m -= digits[i] * ri
    assert m == 0
    b = tuple(digits)
    assert is_admissible(b, a) and val(b, a) == n
    return b


def norm1_statistics(a):
    """(sum over filled, sum over empty) of q^(b_0 + ... + b_{k-1}).

    Computed purely by enumeration; for even-length expansions this pair
    must match the matrix product diag(1,q)^-1 R_q^{a_0}...L_q^{a_{k-1}}
    applied to (1,0)^T.

    >>> tuple(str(p) for p in norm1_statistics((0, 1, 3, 1)))
    ('q^5+q^4+q^3+q^2', 'q^4+q^3+q^2+q+1')
    >>> tuple(str(p) for p in norm1_statistics((1, 1)))
    ('q^2+q', '1')
    """
    filled = Poly()
    empty = Poly()
    for b in enumerate_admissible(a):
        term = Poly.term(1, norm1(b))
        if is_filled(b, a):
            filled = filled + term
        else:
            empty = empty + term
    return filled, empty


def numeration_rows(a):
    """[(n, rep(n, a))] for every n in the valuation interval, ascending."""
    lo, hi = z_interval(a)
    return [(n, rep(n, a)) for n in range(lo, hi)]
