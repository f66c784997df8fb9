"""Laurent polynomials in q with integer coefficients."""

import re
from fractions import Fraction

from . import zpoly


class LaurentPoly:
    """An element of Z[q, q^-1].

    Stored densely as ``q**low * (c0 + c1 q + ...)`` with ``c0`` and the last
    coefficient nonzero.  The zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms=None):
        # terms: mapping exponent -> coefficient
        self._hash = None
        if not terms:
            self.low, self.coeffs = 0, ()
            return
        items = [(e, c) for e, c in terms.items() if c]
        if not items:
            self.low, self.coeffs = 0, ()
            return
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        dense = [0] * (hi - lo + 1)
        for e, c in items:
            dense[e - lo] += c
        self._set(lo, zpoly.trim(dense))

    def _set(self, low, coeffs):
        # normalise so coeffs[0] != 0
        k = 0
        while k < len(coeffs) and not coeffs[k]:
            k += 1
        if k == len(coeffs):
            self.low, self.coeffs = 0, ()
        else:
            self.low, self.coeffs = low + k, tuple(coeffs[k:])

    @classmethod
    def from_dense(cls, low, coeffs):
        obj = cls.__new__(cls)
        obj._hash = None
        obj._set(low, coeffs)
        return obj

    @classmethod
    def monomial(cls, coeff, exp):
        if not coeff:
            return ZERO
        return cls.from_dense(exp, (coeff,))

    @classmethod
    def q(cls):
        return Q

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.monomial(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monomial(self):
        return len(self.coeffs) == 1

    def is_constant(self):
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other, 0)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and (not self.coeffs or self.low == other.low)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs)) if self.coeffs else hash(0)
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other, 0)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        a = zpoly.shift(self.coeffs, self.low - lo)
        b = zpoly.shift(other.coeffs, other.low - lo)
        return LaurentPoly.from_dense(lo, zpoly.add(a, b))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_dense(self.low, zpoly.neg(self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other, 0)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly.from_dense(self.low, zpoly.scale(self.coeffs, other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly.from_dense(self.low + other.low, zpoly.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial() or abs(self.coeffs[0]) != 1:
                raise ArithmeticError("only units of Z[q, q^-1] have negative powers")
            return LaurentPoly.from_dense(self.low * k, (self.coeffs[0] ** (-k),))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self):
        """The involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def evaluate_at(self, q0):
        """Value at a nonzero rational q0."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ZeroDivisionError("q0 must be nonzero")
        return zpoly.evaluate(self.coeffs, q0) * q0 ** self.low

    def evaluate_mod(self, q0, p):
        v = zpoly.evaluate_mod(self.coeffs, q0, p)
        if self.low >= 0:
            return v * pow(q0, self.low, p) % p
        return v * pow(pow(q0, -1, p), -self.low, p) % p

    # -- display ------------------------------------------------------------

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"


def _term_str(c, e):
    if e == 0:
        return str(abs(c))
    var = "q" if e == 1 else f"q^{e}"
    return var if abs(c) == 1 else f"{abs(c)}*{var}"


def format_laurent(p):
    """Render as e.g. ``q^-1 + 2*q^3``; terms in increasing exponent."""
    if not p.coeffs:
        return "0"
    parts = []
    for e, c in sorted(p.terms.items()):
        t = _term_str(c, e)
        if not parts:
            parts.append(("-" + t) if c < 0 else t)
        else:
            parts.append(("- " if c < 0 else "+ ") + t)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*q(?:\^\s*(-?\d+))?)?\s*")


def parse_laurent(text):
    """Inverse of :func:`format_laurent` (also accepts looser spacing)."""
    text = text.strip()
    if not text:
        raise ValueError("empty Laurent polynomial string")
    terms = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign, num, var, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if num is None and var is None:
            raise ValueError(f"dangling sign in {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if var is not None:
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})
