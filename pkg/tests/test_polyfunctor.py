import random
from math import comb, factorial

import pytest

from qfunctor import polyfunctor as pf
from qfunctor import qmatrix as qm
from qfunctor.braidrep import Perm, all_perms, rho, standard_R
from qfunctor.exactalg import ExactMatrix, q
from qfunctor.suites import naturality_check, weight_oracle


def test_intertwiner_space_examples():
    assert pf.intertwiner_space(3, 2, 1).dim == 6
    assert pf.intertwiner_space(2, 2, 2).dim == 10
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            assert pf.intertwiner_space(1, n, d).dim == comb(n + d - 1, d)


@pytest.mark.parametrize("m,n,d", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3)])
def test_intertwiner_basis_commutes(m, n, d):
    space = pf.intertwiner_space(m, n, d)
    assert space.dim == comb(m * n + d - 1, d)
    for X in space.basis:
        assert pf.is_intertwiner(X, m, n, d)


def test_coordinates():
    space = pf.intertwiner_space(2, 2, 2)
    coords = list(range(1, space.dim + 1))
    X = space.combination(coords)
    assert list(space.coordinates(X)) == coords
    # weight projections are intertwiners, a single off-diagonal weight vector is not
    assert space.contains(ExactMatrix.diagonal([1, 0, 0, 0]))
    with pytest.raises(ValueError):
        space.coordinates(ExactMatrix.diagonal([0, 1, 0, 0]))


def test_schur_product_matches_composition():
    rng = random.Random(3)
    A = pf.intertwiner_space(2, 2, 2).basis
    B = pf.intertwiner_space(2, 2, 2).basis
    for _ in range(15):
        X, Y = rng.choice(A), rng.choice(B)
        assert pf.schur_product(X, Y, 2) == X @ Y


def test_schur_product_mixed_shapes():
    X = pf.intertwiner_space(3, 2, 2).basis[4]
    Y = pf.intertwiner_space(2, 3, 2).basis[7]
    assert pf.schur_product(X, Y, 2) == X @ Y


def test_schur_product_unit():
    for f in pf.intertwiner_space(2, 2, 2).basis[:4]:
        assert pf.schur_product(f, ExactMatrix.identity(4), 2) == f


def test_phi_composition():
    subsets = [(), (1,), (2,), (1, 2)]
    for I in subsets:
        for J in subsets:
            lhs = pf.schur_product(qm.phi_functional(J, 2, 2, 2), qm.phi_functional(I, 2, 2, 2))
            assert lhs == qm.phi_functional(set(I) & set(J), 2, 2, 2)


def test_evaluation_examples():
    ext = pf.evaluate(pf.ext_power(2), 2)
    assert ext.dim == 1
    assert pf.dimension(pf.divided_power(2), 2) == 3
    assert pf.dimension(pf.tensor_power(2), 2) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_functor_dimensions(n, d):
    assert pf.dimension(pf.ext_power(d), n) == comb(n, d)
    assert pf.dimension(pf.sym_power(d), n) == comb(n + d - 1, d)
    assert pf.dimension(pf.divided_power(d), n) == comb(n + d - 1, d)


def test_presentations_are_split():
    for F in (pf.sym_power(2), pf.ext_power(2), pf.divided_power(3), pf.ext_power(3)):
        P = pf.evaluate(F, 3)
        assert P.proj @ P.incl == ExactMatrix.identity(P.dim)


def test_divided_power_is_invariant():
    # Γ^d(n) is the subspace where every T_i acts by q
    d, n = 3, 2
    G = pf.evaluate(pf.divided_power(d), n)
    for i in range(1, d):
        assert rho(d, n, i) @ G.incl == G.incl.scale(q)


def test_induced_map_examples():
    T = rho(3, 2, Perm([2, 3, 1]))
    assert pf.induced_map(pf.tensor_power(3), T, 2, 2, check=False) == T
    assert pf.induced_map(pf.ext_power(2), ExactMatrix.identity(4), 2, 2) == ExactMatrix.identity(1)
    with pytest.raises(ValueError):
        pf.induced_map(pf.sym_power(2), ExactMatrix.diagonal([1, 2, 3, 4]), 2, 2)


@pytest.mark.parametrize("F", [pf.sym_power(2), pf.ext_power(2), pf.divided_power(2), pf.gamma(2, 2)], ids=str)
def test_functoriality(F):
    rng = random.Random(11)
    d = F.degree
    A = pf.intertwiner_space(2, 3, d).basis
    B = pf.intertwiner_space(3, 2, d).basis
    for _ in range(4):
        X, Y = rng.choice(A), rng.choice(B)
        lhs = pf.induced_map(F, Y @ X, 2, 2, check=False)
        rhs = pf.induced_map(F, Y, 3, 2, check=False) @ pf.induced_map(F, X, 2, 3, check=False)
        assert lhs == rhs
    k = pf.dimension(F, 2)
    assert pf.induced_map(F, ExactMatrix.identity(2**d), 2, 2) == ExactMatrix.identity(k)


def test_gamma_functor():
    for d in (1, 2, 3):
        for n in (1, 2, 3):
            for m in (1, 2):
                assert pf.dimension(pf.gamma(d, n), m) == pf.gamma_decomposition_rhs(d, n, m)
    with pytest.raises(ValueError):
        pf.dual_functor(pf.gamma(2, 2))


def test_dual_dimensions():
    for d in (1, 2, 3):
        for n in (1, 2, 3):
            assert pf.dimension(pf.dual_functor(pf.sym_power(d)), n) == pf.dimension(pf.divided_power(d), n)
            assert pf.dimension(pf.dual_functor(pf.ext_power(d)), n) == comb(n, d)


def test_adjoint_presentations():
    from qfunctor.schurweyl import antisymmetrization

    for d in (1, 2, 3):
        for n in (1, 2, 3):
            assert pf.evaluate(pf.divided_power(d), n).incl == pf.evaluate(pf.sym_power(d), n).proj.T
            assert antisymmetrization(d, n) == pf.evaluate(pf.ext_power(d), n).proj.T


def test_tw_dualizes_to_inverse():
    for w in all_perms(3):
        assert rho(3, 2, w).T == rho(3, 2, w.inverse())


def test_weight_idempotents():
    idem = pf.weight_idempotents(2, 2)
    assert idem[(1, 1)].rank() == 2
    assert idem[(1, 1)] == ExactMatrix.diagonal([0, 1, 1, 0])
    assert idem[(2, 0)].rank() == 1
    for n in (2, 3):
        for d in (2, 3):
            for comp, P in pf.weight_idempotents(n, d).items():
                want = factorial(d)
                for c in comp:
                    want //= factorial(c)
                assert P.rank() == want


def test_weight_dimensions():
    for kind, make in (("ext", pf.ext_power), ("sym", pf.sym_power), ("tensor", pf.tensor_power)):
        for comp in pf.compositions(2, 3):
            assert pf.weight_dimension(make(2), 3, comp) == weight_oracle(kind, comp)


def test_braiding_basics():
    I = pf.identity_functor()
    assert pf.braiding(I, I, 2) == standard_R(2)
    assert pf.r_from_sigma(2) == standard_R(2)
    s = pf.sigma_form(2)
    assert s[(qm.QVar(1, 1), qm.QVar(2, 2))] == 1
    assert s[(qm.QVar(1, 1), qm.QVar(1, 1))] == q


def test_braiding_dual():
    I = pf.identity_functor()
    assert pf.braiding(I, I, 2).T == pf.braiding(pf.dual_functor(I), pf.dual_functor(I), 2)
    F, G = pf.sym_power(2), pf.ext_power(2)
    assert pf.braiding(F, G, 2).T == pf.braiding(pf.dual_functor(G), pf.dual_functor(F), 2)


def test_braiding_naturality():
    assert naturality_check(pf.sym_power(1), pf.ext_power(2)).passed
    assert naturality_check(pf.divided_power(2), pf.sym_power(2)).passed


def test_comodules():
    for F in (pf.ext_power(2), pf.sym_power(2)):
        assert pf.comodule_counit_holds(F, 2)
    assert pf.comodule_coassociative(pf.sym_power(2), 2, 2, 2)


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2)])
def test_commutant_equals_hecke_span(n, d):
    rep = pf.commutant(n, d)
    assert rep.hecke_dim == factorial(d) == rep.commutant_dim
    assert rep.spans_equal


def test_commutant_exact_path_agrees():
    rep = pf.commutant(2, 2, early_stop=False)
    assert rep.commutant_dim == 2 and rep.spans_equal


def test_functor_validation():
    with pytest.raises(ValueError):
        pf.image(pf.sym_power(2), pf.ext_power(3))
