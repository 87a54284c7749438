"""Continued fractions of positive rationals and the word codec.

Rationals are `fractions.Fraction` values, always > 0 and auto-reduced.
Expansions are tuples of ints (a_0, ..., a_{k-1}) with a_0 >= 0 and
a_i >= 1 for i > 0.  Every positive rational has exactly one even-length
and one odd-length expansion; the two differ by the rewrite
[..., a, 1] <-> [..., a+1].  The even form encodes the binary word

    W(a) = 1^{a_0} 0^{a_1} 1^{a_2} ... 0^{a_{2l-1} - 1}

which is a bijection from positive rationals onto all binary words.
"""

from fractions import Fraction

from .words import check_word, complement, hat

__all__ = [
    "check_cf",
    "cf_value",
    "cf_even",
    "cf_odd",
    "cf_str",
    "cf_parse",
    "word_of",
    "rational_of_word",
    "tau",
    "convergents",
    "r_sequence",
    "matrix_identity_check",
    "stern_brocot_children",
    "calkin_wilf_children",
    "sb_level",
    "cw_level",
    "rationals_with_sum_upto",
]


def check_cf(a):
    a = tuple(int(x) for x in a)
    if not a:
        raise ValueError("empty expansion")
    if a[0] < 0 or any(x < 1 for x in a[1:]):
        raise ValueError("invalid partial quotients: %r" % (a,))
    if a == (0,):
        raise ValueError("[0] does not expand a positive rational")
    return a


def cf_value(a):
    """Evaluate (a_0, ..., a_{k-1}) to a Fraction.

    >>> cf_value((3, 6, 1))
    Fraction(22, 7)
    """
    a = check_cf(a)
    x = Fraction(a[-1])
    for q in reversed(a[:-1]):
        x = q + 1 / x
    return x


def _cf_raw(x):
    # plain Euclidean expansion; never ends in 1 except for x = 1 -> (1,)
    x = Fraction(x)
    if x <= 0:
        raise ValueError("need a positive rational, got %s" % x)
    quotients = []
    num, den = x.numerator, x.denominator
    while den:
        q, r = divmod(num, den)
        quotients.append(q)
        num, den = den, r
    return tuple(quotients)


def _with_parity(a, even):
    if (len(a) % 2 == 0) == even:
        return a
    if a[-1] == 1 and len(a) > 1:
        return a[:-2] + (a[-2] + 1,)
    return a[:-1] + (a[-1] - 1, 1)


def cf_even(x):
    """The even-length expansion; cf_even(1) == (0, 1).

    >>> cf_even(Fraction(22, 7))
    (3, 7)
    >>> cf_even(Fraction(4, 5))
    (0, 1, 3, 1)
    """
    return _with_parity(_cf_raw(x), True)


def cf_odd(x):
    """The odd-length expansion; cf_odd(1) == (1,).

    >>> cf_odd(Fraction(22, 7))
    (3, 6, 1)
    """
    return _with_parity(_cf_raw(x), False)


def cf_str(a):
    a = check_cf(a)
    if len(a) == 1:
        return "[%d]" % a[0]
    return "[%d;%s]" % (a[0], ",".join(str(x) for x in a[1:]))


def cf_parse(text):
    """Parse "[a0;a1,...,ak-1]" (or "[a0]") back to a tuple."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError("expected [a0;a1,...], got %r" % text)
    s = s[1:-1]
    head, _, tail = s.partition(";")
    parts = [head] + (tail.split(",") if tail else [])
    try:
        return check_cf(int(p) for p in parts)
    except ValueError:
        raise ValueError("expected [a0;a1,...], got %r" % text)


def word_of(a):
    """The word W(a) of an even-length expansion.

    >>> word_of((0, 1, 1, 1))
    '01'
    >>> word_of((3, 2, 1, 1))
    '111001'
    """
    a = check_cf(a)
    if len(a) % 2:
        raise ValueError("word_of needs the even-length form, got %s" % cf_str(a))
    runs = []
    for i, q in enumerate(a):
        letter = "1" if i % 2 == 0 else "0"
        runs.append(letter * (q - 1 if i == len(a) - 1 else q))
    return "".join(runs)


def rational_of_word(w):
    """Inverse of x -> word_of(cf_even(x)).

    >>> rational_of_word("")
    Fraction(1, 1)
    >>> rational_of_word("0")
    Fraction(1, 2)
    """
    check_word(w)
    if not w:
        return Fraction(1)
    runs = []
    for c in w:
        if runs and runs[-1][0] == c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
    quotients = [0] if w[0] == "0" else []
    quotients.extend(n for _, n in runs)
    if w[-1] == "1":
        quotients.append(1)
    else:
        quotients[-1] += 1
    assert len(quotients) % 2 == 0
    return cf_value(quotients)


def tau(a):
    """The involution [a_0;...;a_{2l-1}] -> [a_{2l-1}-1; ...; a_1, a_0+1].

    Conjugate of the hat involution through the word codec:
    word_of(tau(a)) == hat(word_of(a)).

    >>> tau((0, 1, 3, 1))
    (0, 3, 1, 1)
    >>> tau((1, 1))
    (0, 2)
    """
    a = check_cf(a)
    if len(a) % 2:
        raise ValueError("tau needs the even-length form, got %s" % cf_str(a))
    t = (a[-1] - 1,) + tuple(reversed(a[1:-1])) + (a[0] + 1,)
    assert word_of(t) == hat(word_of(a))
    return t


def convergents(a):
    """Numerators and denominators p_i, q_i of the truncations of a.

    Returns (p, q): two tuples of length k+1 holding p_{-1}, p_0, ..,
    p_{k-1} and q_{-1}, q_0, .., q_{k-1}, so p[i+1] is p_i.

    >>> convergents((2, 2, 2))[0]
    (1, 2, 5, 12)
    """
    a = check_cf(a)
    p = [1, a[0]]
    q = [0, 1]
    for x in a[1:]:
        p.append(x * p[-1] + p[-2])
        q.append(x * q[-1] + q[-2])
    return tuple(p), tuple(q)


def r_sequence(a):
    """The weights r_i = p_{i-1} + q_{i-1}.

    Returns a tuple of length k+2 holding r_{-1}, r_0, ..., r_k, so
    r[i+1] is r_i; r_{-1} = r_0 = 1 and r_{i} = a_{i-1} r_{i-1} + r_{i-2}.

    >>> r_sequence((2, 2, 2))
    (1, 1, 3, 7, 17)
    """
    a = check_cf(a)
    r = [1, 1]
    for x in a:
        r.append(x * r[-1] + r[-2])
    p, q = convergents(a)
    assert all(r[i + 2] == p[i + 1] + q[i + 1] for i in range(len(a)))
    return tuple(r)


_L = ((1, 0), (1, 1))
_R = ((1, 1), (0, 1))


def _mat_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def matrix_identity_check(a):
    """(r, s) from the product R^{a_0} L^{a_1} ... L^{a_{2l-1}} (1,0)^T.

    Also checks the variant ending in L^{a_{2l-1}-1} (1,1)^T.

    >>> matrix_identity_check((0, 1, 3, 1))
    (4, 5)
    """
    a = check_cf(a)
    if len(a) % 2:
        raise ValueError("even-length form required")
    m = ((1, 0), (0, 1))
    for i, x in enumerate(a):
        base = _R if i % 2 == 0 else _L
        for _ in range(x):
            m = _mat_mul(m, base)
    r, s = m[0][0], m[1][0]
    # second display of the same product: drop one L, apply to (1,1)
    alt = ((1, 0), (0, 1))
    for i, x in enumerate(a):
        base = _R if i % 2 == 0 else _L
        for _ in range(x - 1 if i == len(a) - 1 else x):
            alt = _mat_mul(alt, base)
    assert (alt[0][0] + alt[0][1], alt[1][0] + alt[1][1]) == (r, s)
    return r, s


def stern_brocot_children(x):
    """Children of x in the tree that appends one letter to its word.

    >>> stern_brocot_children(Fraction(1))
    (Fraction(1, 2), Fraction(2, 1))
    """
    w = word_of(cf_even(x))
    return rational_of_word(w + "0"), rational_of_word(w + "1")


def calkin_wilf_children(x):
    """Children of x in the tree that prepends one letter to its word."""
    w = word_of(cf_even(x))
    return rational_of_word("0" + w), rational_of_word("1" + w)


def sb_level(depth):
    """Level `depth` of the prefix (Stern-Brocot) tree, left to right."""
    words = [""]
    for _ in range(depth):
        words = [w + c for w in words for c in "01"]
    return [rational_of_word(w) for w in words]


def cw_level(depth):
    """Level `depth` of the suffix (Calkin-Wilf) tree, left to right."""
    words = [""]
    for _ in range(depth):
        words = [c + w for w in words for c in "01"]
    return [rational_of_word(w) for w in words]


def rationals_with_sum_upto(bound, minimum=2):
    """All positive rationals r/s with minimum <= r+s <= bound, reduced."""
    from math import gcd

    out = []
    for total in range(minimum, bound + 1):
        for r in range(1, total):
            s = total - r
            if gcd(r, s) == 1:
                out.append(Fraction(r, s))
    return out
