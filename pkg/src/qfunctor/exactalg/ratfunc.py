"""The field Q(q) of rational functions, in canonical reduced form."""

from fractions import Fraction
from math import gcd as igcd

from . import zpoly
from .laurent import LaurentPoly, format_laurent, parse_laurent


def _split(p):
    """Laurent poly -> (shift, Z[q] tuple with nonzero constant term)."""
    return p.low, p.coeffs


class RatFunc:
    """num/den with num, den Laurent polynomials over Z.

    Canonical form: den is a polynomial with nonzero constant term (lowest
    exponent 0) and positive leading coefficient, num and den are coprime in
    Q[q], and the integer contents of num and den are jointly coprime.  Two
    equal rational functions therefore have identical (num, den).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, RatFunc) and den is None:
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        if isinstance(num, Fraction) and den is None:
            num, den = num.numerator, num.denominator
        num = LaurentPoly.coerce(num)
        den = _ONE_L if den is None else LaurentPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self._hash = None
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x, _ONE_L)
        if isinstance(x, int):
            return cls._raw(LaurentPoly.monomial(x, 0), _ONE_L) if x else ZERO
        if isinstance(x, Fraction):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @classmethod
    def from_polys(cls, low, num, den):
        """From Z[q] tuples: q**low * num / den (not necessarily reduced)."""
        return cls(LaurentPoly.from_dense(low, num), LaurentPoly.from_dense(0, den))

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_laurent(self):
        return self.den.coeffs == (1,)

    def as_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den.coeffs))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            s = self.num + other.num
            return RatFunc._raw(s, _ONE_L) if s else ZERO
        if self.den.coeffs == other.den.coeffs:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num.coeffs or not other.num.coeffs:
            return ZERO
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return RatFunc._raw(self.num * other.num, _ONE_L)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- specialisation -----------------------------------------------------

    def evaluate_at(self, q0):
        """Value at a nonzero rational q0; raises ZeroDivisionError at a pole."""
        q0 = Fraction(q0)
        d = self.den.evaluate_at(q0)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at q = {q0}")
        return self.num.evaluate_at(q0) / d

    def evaluate_mod(self, q0, p):
        d = self.den.evaluate_mod(q0, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the chosen point")
        return self.num.evaluate_mod(q0, p) * pow(d, -1, p) % p

    def __str__(self):
        if self.den.coeffs == (1,):
            return format_laurent(self.num)
        return f"({format_laurent(self.num)})/({format_laurent(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"


def _canonical(num, den):
    if not num.coeffs:
        return _ZERO_L, _ONE_L
    a, n = _split(num)
    b, d = _split(den)
    if len(d) > 1 and len(n) > 0:
        g = zpoly.poly_gcd(n, d)
        if len(g) > 1:
            n = zpoly.divexact(n, g)
            d = zpoly.divexact(d, g)
    c = igcd(zpoly.content(n), zpoly.content(d))
    if d[-1] < 0:
        c = -c
    if c != 1:
        n = tuple(x // c for x in n)
        d = tuple(x // c for x in d)
    return LaurentPoly.from_dense(a - b, n), LaurentPoly.from_dense(0, d)


def parse_ratfunc(text):
    """Parse ``num`` or ``(num)/(den)`` as produced by ``str``."""
    text = text.strip()
    if text.startswith("(") and ")/(" in text and text.endswith(")"):
        head, tail = text[1:-1].split(")/(", 1)
        return RatFunc(parse_laurent(head), parse_laurent(tail))
    return RatFunc.coerce(parse_laurent(text))


_ZERO_L = LaurentPoly()
_ONE_L = LaurentPoly({0: 1})
ZERO = RatFunc._raw(_ZERO_L, _ONE_L)
ONE = RatFunc._raw(_ONE_L, _ONE_L)
Q = RatFunc._raw(LaurentPoly({1: 1}), _ONE_L)
QINV = RatFunc._raw(LaurentPoly({-1: 1}), _ONE_L)
