from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfunctor.braidrep import rho
from qfunctor.exactalg import (
    ExactMatrix,
    LaurentPoly,
    RatFunc,
    char_poly,
    column_space,
    evaluate_at,
    format_laurent,
    kernel,
    parse_laurent,
    parse_ratfunc,
    poly_eval,
    q,
    qinv,
    rref,
)
from qfunctor.exactalg import elim

laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
nonzero_laurents = laurents.filter(bool)
ratfuncs = st.builds(RatFunc, laurents, nonzero_laurents)
nonzero_ratfuncs = ratfuncs.filter(bool)


def L(text):
    return parse_laurent(text)


# -- Laurent polynomials ------------------------------------------------------------


def test_zero_is_empty():
    assert LaurentPoly().terms == {}
    assert LaurentPoly({3: 0, -1: 0}) == LaurentPoly()
    assert not LaurentPoly({2: 0})


def test_no_zero_coefficients_stored():
    p = L("q + 1") - L("q")
    assert p.terms == {0: 1}


def test_format_examples():
    assert format_laurent(L("q^-1 + 2*q^3")) == "q^-1 + 2*q^3"
    assert str(-q + qinv) == "q^-1 - q"
    assert str(LaurentPoly({2: -1})) == "-q^2"
    assert str(LaurentPoly({0: -1})) == "-1"


@given(laurents)
def test_format_parse_round_trip(p):
    assert parse_laurent(format_laurent(p)) == p


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurents, st.fractions(min_value=-3, max_value=3).filter(bool))
def test_evaluation_is_a_ring_map(a, x):
    b = a * a + L("q")
    assert b.evaluate_at(x) == a.evaluate_at(x) ** 2 + x


# -- rational functions ---------------------------------------------------------------


@settings(max_examples=60)
@given(nonzero_ratfuncs)
def test_inverse(a):
    assert a * a.inverse() == RatFunc.coerce(1)


@settings(max_examples=60)
@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RatFunc.coerce(0)


@settings(max_examples=60)
@given(ratfuncs)
def test_canonical_form(a):
    den = a.den
    assert min(den.terms) == 0
    assert den.terms[max(den.terms)] > 0
    # equal values have equal representations
    b = RatFunc(a.num * L("q^2 + 1"), a.den * L("q^2 + 1"))
    assert b == a and hash(b) == hash(a) and str(b) == str(a)


@settings(max_examples=60)
@given(ratfuncs)
def test_ratfunc_string_round_trip(a):
    assert parse_ratfunc(str(a)) == a


def test_cancellation():
    r = RatFunc(L("q^2 - 1"), L("q - 1"))
    assert r == RatFunc.coerce(L("q + 1"))
    assert r.is_laurent()


def test_evaluate_examples():
    assert evaluate_at(L("q^2 - q^-1"), 1) == 0
    assert evaluate_at(q - qinv, 2) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        evaluate_at(RatFunc(1, L("q - 1")), 1)


# -- matrices -----------------------------------------------------------------------


def test_rref_examples():
    R, piv = rref(ExactMatrix.identity(2))
    assert R == ExactMatrix.identity(2) and piv == [0, 1]
    M = ExactMatrix([[q, q * q], [1, q]])
    R, piv = rref(M)
    assert R == ExactMatrix([[1, q], [0, 0]]) and piv == [0]
    Z = ExactMatrix.zeros(2, 3)
    R, piv = rref(Z)
    assert R == Z and piv == []


def test_kernel_examples():
    assert kernel(ExactMatrix.identity(3)) == []
    ker = kernel(ExactMatrix.zeros(3, 3))
    assert ExactMatrix.from_columns([dict(enumerate(v)) for v in ker], 3).rank() == 3
    M = rho(2, 2, 1) - ExactMatrix.identity(4).scale(q)
    ker = kernel(M)
    assert len(ker) == 3
    for v in ker:
        assert not any(M @ v)


def test_column_space_examples():
    assert len(column_space(ExactMatrix.identity(3))) == 3
    assert column_space(ExactMatrix.zeros(2, 2)) == []
    M = ExactMatrix([[1], [q]]) @ ExactMatrix([[1, q]])
    cs = column_space(M)
    assert len(cs) == 1
    v = cs[0]
    assert v[1] == v[0] * q


def test_char_poly_examples():
    t = char_poly(ExactMatrix([[q]]))
    assert t == (-q, RatFunc.coerce(1))
    a, b = q + 1, qinv * 3
    assert char_poly(ExactMatrix.diagonal([a, b])) == (a * b, -(a + b), RatFunc.coerce(1))
    cp = char_poly(rho(2, 2, 1))
    # (t - q)^3 (t + q^-1)
    want = (RatFunc.coerce(1),)
    for root in (q, q, q, -qinv):
        shifted = [RatFunc.coerce(0)] + list(want)
        want = tuple(shifted[k] - root * (want[k] if k < len(want) else 0) for k in range(len(shifted)))
    assert cp == want
    assert poly_eval(cp, q) == 0 and poly_eval(cp, -qinv) == 0


@st.composite
def small_matrices(draw):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    entries = st.sampled_from([RatFunc.coerce(0), RatFunc.coerce(0), q, qinv, q + 1, RatFunc.coerce(2), -q * q])
    return ExactMatrix([[draw(entries) for _ in range(c)] for _ in range(r)])


@settings(max_examples=60)
@given(small_matrices())
def test_rank_nullity_and_kernel(M):
    ker = kernel(M)
    assert M.rank() + len(ker) == M.cols
    for v in ker:
        assert not any(M @ v)
    R, piv = rref(M)
    assert rref(R) == (R, piv)


@settings(max_examples=60)
@given(small_matrices(), st.integers(0, 2**30))
def test_modular_rank_is_a_lower_bound(M, seed):
    rows = M.sparse_rows()
    assert elim.rank_mod_p(rows, M.cols, elim.random_point(seed)) <= M.rank()


def test_transpose_and_kron():
    M = ExactMatrix([[1, q], [0, 2]])
    assert M.T.T == M
    assert ExactMatrix.zeros(0, 3).T.shape == (3, 0)
    assert M.kron(ExactMatrix.identity(2)).shape == (4, 4)
    assert (M @ M.inverse()) == ExactMatrix.identity(2)
