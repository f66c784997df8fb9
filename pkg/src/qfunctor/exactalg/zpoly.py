"""Dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints, lowest degree first, with no
trailing zeros.  The zero polynomial is the empty tuple.  Everything here is
a plain function on tuples so the hot loops in elimination stay cheap.
"""

from math import gcd as igcd

ZERO = ()
ONE = (1,)


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    if len(a) == len(b):
        return trim(out)
    return tuple(out)


def neg(a):
    return tuple(-x for x in a)


def sub(a, b):
    if not b:
        return a
    la, lb = len(a), len(b)
    out = list(a) + [0] * (lb - la) if lb > la else list(a)
    for i, x in enumerate(b):
        out[i] -= x
    return trim(out)


def scale(a, k):
    if not k or not a:
        return ZERO
    return tuple(k * x for x in a)


def mul(a, b):
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def shift(a, k):
    """Multiply by q**k, k >= 0."""
    if not a or not k:
        return a
    return (0,) * k + a


def divexact(a, b):
    """Quotient a / b, which must be exact over the integers."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO
    if len(b) == 1:
        d = b[0]
        out = []
        for x in a:
            qt, r = divmod(x, d)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(qt)
        return tuple(out)
    rem = list(a)
    lb = len(b)
    lead = b[-1]
    nq = len(a) - lb + 1
    if nq <= 0:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * nq
    for k in range(nq - 1, -1, -1):
        x = rem[k + lb - 1]
        if x:
            qt, r = divmod(x, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k] = qt
            for j in range(lb):
                rem[k + j] -= qt * b[j]
    if any(rem[: lb - 1]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


def content(a):
    g = 0
    for x in a:
        g = igcd(g, x)
        if g == 1:
            break
    return g


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def prem(a, b):
    """Pseudo-remainder of a by b."""
    lb = len(b)
    rem = list(a)
    lead = b[-1]
    while len(rem) >= lb:
        x = rem[-1]
        k = len(rem) - lb
        rem = [lead * y for y in rem]
        for j in range(lb):
            rem[k + j] -= x * b[j]
        rem.pop()
        while rem and not rem[-1]:
            rem.pop()
    return tuple(rem)


def gcd(a, b):
    """Greatest common divisor in Z[q], primitive-normalised times the integer gcd.

    The result has positive leading coefficient.
    """
    if not a:
        return primitive(b) if b else ZERO
    if not b:
        return primitive(a)
    ci = igcd(content(a), content(b))
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            a = ONE
            break
        r = prem(a, b)
        a, b = b, primitive(r)
    g = primitive(a)
    return scale(g, ci) if ci != 1 else g


def poly_gcd(a, b):
    """Primitive gcd (no integer content)."""
    g = gcd(a, b)
    return primitive(g)


def low_order(a):
    """Index of the lowest nonzero coefficient."""
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("zero polynomial has no order")


def evaluate(a, x):
    """Horner evaluation at x (any number type supporting * and +)."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def evaluate_mod(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def size_key(a):
    """Heuristic cost used for pivot selection."""
    return (len(a), sum(abs(x).bit_length() for x in a))
