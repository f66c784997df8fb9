import json
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfunctor import qmatrix as qm
from qfunctor.braidrep import rho
from qfunctor.exactalg import ExactMatrix, LaurentPoly, RatFunc
from qfunctor.polyfunctor import intertwiner_space
from qfunctor.qmatrix import QMatrixElement, QVar, normal_form

Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})


def X(i, j):
    return QVar(i, j)


def gen(shape, i, j):
    return QMatrixElement.generator(shape, i, j)


def words(m, n, max_len=4):
    var = st.builds(QVar, st.integers(1, m), st.integers(1, n))
    return st.lists(var, min_size=0, max_size=max_len).map(tuple)


def test_variable_order_is_total():
    vs = [X(i, j) for i in (1, 2) for j in (1, 2)]
    for a in vs:
        for b in vs:
            assert (a < b) + (a == b) + (a > b) == 1
    assert str(X(1, 2)) == "x12"


def test_rewrite_examples():
    shape = (2, 2)
    assert normal_form([X(1, 2), X(1, 1)], shape) == QMatrixElement(shape, {(X(1, 1), X(1, 2)): Q}, reduced=True)
    got = normal_form([X(2, 2), X(1, 1)], shape)
    want = QMatrixElement(shape, {(X(1, 1), X(2, 2)): 1, (X(1, 2), X(2, 1)): Q - QINV}, reduced=True)
    assert got == want
    w = (X(1, 1), X(2, 2))
    assert normal_form(w, shape).terms == {w: LaurentPoly({0: 1})}


def test_defining_relations_hold():
    shape = (2, 2)
    a, b, c, d = (gen(shape, i, j) for i, j in [(1, 1), (1, 2), (2, 1), (2, 2)])
    # same row or same column: the later generator moves left at the cost of q
    assert b * a == (a * b).scale(Q)
    assert c * a == (a * c).scale(Q)
    assert b * c == c * b
    assert d * a - a * d == (b * c).scale(Q - QINV)


@settings(max_examples=100)
@given(words(2, 3), st.integers(0, 10**6))
def test_confluence(word, seed):
    shape = (2, 3)
    assert normal_form(word, shape) == qm.normal_form_random(word, shape, random.Random(seed))


@settings(max_examples=100)
@given(words(3, 2))
def test_normal_form_is_idempotent_and_sorted(word):
    shape = (3, 2)
    e = normal_form(word, shape)
    for w in e.terms:
        assert list(w) == sorted(w)
    assert QMatrixElement(shape, e.terms) == e
    assert e.is_homogeneous()


@settings(max_examples=50)
@given(words(2, 2, 2), words(2, 2, 2), words(2, 2, 2))
def test_multiplication_is_associative(u, v, w):
    shape = (2, 2)
    a, b, c = (normal_form(x, shape) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)


def test_degree_basis():
    assert qm.degree_basis(1, 1, 4) == ((X(1, 1),) * 4,)
    assert len(qm.degree_basis(2, 2, 1)) == 4
    assert len(qm.degree_basis(2, 2, 2)) == 10
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for d in (0, 1, 2, 3):
                assert len(qm.degree_basis(m, n, d)) == comb(m * n + d - 1, d) == qm.basis_dimension(m, n, d)


def test_unknown_generator_rejected():
    with pytest.raises(ValueError):
        QMatrixElement((2, 2), {(X(3, 1),): 1})


def test_coproduct_examples():
    t = qm.coproduct(gen((2, 2), 1, 1), 2)
    want = qm.QTensor([(2, 2), (2, 2)], {((X(1, 1),), (X(1, 1),)): 1, ((X(1, 2),), (X(2, 1),)): 1})
    assert t == want
    unit = qm.coproduct(QMatrixElement.one((2, 2)), 2)
    assert unit.terms == {((), ()): LaurentPoly({0: 1})}


@pytest.mark.parametrize("word", [[(1, 1)], [(2, 1), (1, 2)], [(2, 2), (1, 1), (1, 2)]])
def test_coassociativity(word):
    e = normal_form(word, (2, 2))
    t = qm.coproduct(e, 2)
    assert qm.coproduct_leg(t, 0, 2) == qm.coproduct_leg(t, 1, 2)


@settings(max_examples=25, deadline=None)
@given(words(2, 2, 2), words(2, 2, 2))
def test_coproduct_is_multiplicative(u, v):
    a, b = normal_form(u, (2, 2)), normal_form(v, (2, 2))
    assert qm.coproduct(a * b, 2) == qm.coproduct(a, 2) * qm.coproduct(b, 2)


def test_counit_examples():
    shape = (2, 2)
    assert qm.counit(normal_form([X(1, 1), X(2, 2)], shape)) == 1
    assert qm.counit(gen(shape, 1, 2)) == 0
    assert qm.counit(qm.quantum_determinant(2)) == 1


@settings(max_examples=40)
@given(words(2, 2, 3), words(2, 2, 3))
def test_counit_is_multiplicative(u, v):
    a, b = normal_form(u, (2, 2)), normal_form(v, (2, 2))
    assert qm.counit(a * b) == qm.counit(a) * qm.counit(b)


def test_quantum_determinant():
    assert qm.quantum_determinant(1) == gen((1, 1), 1, 1)
    det = qm.quantum_determinant(2)
    want = QMatrixElement((2, 2), {(X(1, 1), X(2, 2)): 1, (X(1, 2), X(2, 1)): -QINV}, reduced=True)
    assert det == want
    assert str(det) == "x11*x22 + (-q^-1)*x12*x21"


@pytest.mark.parametrize("n", [2, 3])
def test_determinant_is_central(n):
    det = qm.quantum_determinant(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = gen((n, n), i, j)
            assert x * det == det * x


def test_determinant_is_grouplike():
    det = qm.quantum_determinant(2)
    t = qm.coproduct(det, 2)
    d = det.terms
    assert t == qm.QTensor([(2, 2), (2, 2)], {(a, b): c1 * c2 for a, c1 in d.items() for b, c2 in d.items()})


def test_json_round_trip():
    e = qm.quantum_determinant(3)
    text = e.dumps()
    back = QMatrixElement.from_json(json.loads(text))
    assert back == e
    assert back.dumps() == text


def test_phi_functionals():
    n = 2
    assert qm.phi_functional(range(1, n + 1), n, n, 2) == qm.counit_functional(n, 2)
    zero = qm.phi_functional((), n, n, 2)
    assert not any(zero.values)
    e = normal_form([X(1, 1), X(2, 2)], (2, 2))
    assert qm.phi_functional({1, 2}, 2, 2, 2)(e) == 1
    assert qm.phi_functional({1}, 2, 2, 2)(e) == 0


@pytest.mark.parametrize("m,d", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)])
def test_inclusion_exclusion(m, d):
    acc = qm.phi_functional((), m, m, d)
    for I, c in qm.inclusion_exclusion_terms(m, d).items():
        acc = acc + qm.phi_functional(I, m, m, d).scale(c)
    assert acc == qm.phi_functional(range(1, m + 1), m, m, d)
    assert all(len(I) <= d for I in qm.inclusion_exclusion_terms(m, d))


def test_pairing_examples():
    Id = ExactMatrix.identity(2)
    assert qm.pairing(Id, [(1, 1)]) == 1
    assert qm.pairing(Id, [(1, 2)]) == 0
    assert qm.pairing(rho(2, 2, 1), [(1, 2), (2, 1)]) == 1


def test_pairing_vanishes_on_relations():
    rng = random.Random(7)
    space = intertwiner_space(2, 2, 2)
    gens = [(j, i) for j in (1, 2) for i in (1, 2)]
    for _ in range(20):
        Xm = space.combination([rng.randint(-3, 3) for _ in range(space.dim)])
        w = [rng.choice(gens) for _ in range(2)]
        assert qm.pairing(Xm, w, 2, 2) == qm.pairing(Xm, normal_form(w, (2, 2)))


def test_functional_intertwiner_round_trip():
    for n, m, d in [(2, 2, 2), (2, 3, 2), (3, 2, 1)]:
        space = intertwiner_space(m, n, d)
        for Xm in space.basis:
            f = qm.intertwiner_to_functional(Xm, n, m, d)
            assert qm.functional_to_intertwiner(f) == Xm
