"""Quantum polynomial functors evaluated on the standard spaces V_n.

Morphisms m -> n of degree d are braid intertwiners V_m^{⊗d} -> V_n^{⊗d}.
A functor is described symbolically (:class:`Functor`) and evaluated at n to
a :class:`Presentation`: a carrier of dimension k together with

* ``incl``: an n^d x k matrix (a basis of a subspace, or a section of a quotient);
* ``proj``: a k x n^d matrix with ``proj @ incl = 1``.

The induced map of an intertwiner X: m -> n is ``proj_n @ X @ incl_m``.  This is
the restriction of X for sub-objects and its descent for quotients; both are
well defined because X commutes with the Hecke action.

The exception is Γ^{d,m} = Hom(m, -), whose carrier is an intertwiner space
itself and whose induced maps are post-composition via the Schur product.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import qmatrix as qm
from .braidrep import (
    Perm,
    act,
    all_perms,
    antisymmetrizer,
    block_swap,
    content,
    index_of,
    rho,
    rho_generators,
    standard_R,
    symmetrizer,
    tensor_basis,
)
from .exactalg import ExactMatrix, LaurentPoly, RatFunc
from .exactalg import elim
from .exactalg.matrix import kernel_sparse, pivot_columns

_Q = RatFunc.coerce(LaurentPoly({1: 1}))
_ONE = RatFunc.coerce(1)


# -- intertwiner spaces ------------------------------------------------------------


@dataclass(frozen=True)
class IntertwinerSpace:
    """A basis of Hom_B(V_m^{⊗d}, V_n^{⊗d}).

    ``free`` lists flat positions ``row * m^d + col``; basis element k is 1 at
    free[k] and 0 at every other free position, so coordinates of any member
    are its entries at those positions.
    """

    m: int
    n: int
    d: int
    basis: tuple
    free: tuple

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, X):
        M = self.m**self.d
        coords = [X[f // M, f % M] for f in self.free]
        if self.combination(coords) != X:
            raise ValueError("matrix is not in the intertwiner space")
        return coords

    def contains(self, X):
        try:
            self.coordinates(X)
        except ValueError:
            return False
        return True

    def combination(self, coords):
        acc = ExactMatrix.zeros(self.n**self.d, self.m**self.d)
        for c, B in zip(coords, self.basis):
            if c:
                acc = acc + B.scale(c)
        return acc


def is_intertwiner(X, m, n, d):
    if X.shape != (n**d, m**d):
        return False
    return all(X @ rho(d, m, i) == rho(d, n, i) @ X for i in range(1, d))


@lru_cache(maxsize=None)
def intertwiner_space(m, n, d):
    """Kernel of X -> X ρ_m(T_i) - ρ_n(T_i) X, i = 1..d-1."""
    N, M = n**d, m**d
    rows = []
    for i in range(1, d):
        Rm, Rn = rho(d, m, i), rho(d, n, i)
        col_nz = [[(K, Rm[K, I]) for K in range(M) if Rm[K, I]] for I in range(M)]
        row_nz = [[(K, Rn[J, K]) for K in range(N) if Rn[J, K]] for J in range(N)]
        for J in range(N):
            for I in range(M):
                eq = {}
                for K, v in col_nz[I]:
                    eq[J * M + K] = v
                for K, v in row_nz[J]:
                    u = K * M + I
                    t = eq.get(u, RatFunc.coerce(0)) - v
                    if t:
                        eq[u] = t
                    else:
                        eq.pop(u, None)
                if eq:
                    rows.append(eq)
    ker = elim.kernel(rows, N * M)
    basis = []
    for _, vec in ker:
        grid = [{} for _ in range(N)]
        for u, v in vec.items():
            grid[u // M][u % M] = v
        basis.append(ExactMatrix.from_sparse_rows(grid, M))
    return IntertwinerSpace(m, n, d, tuple(basis), tuple(f for f, _ in ker))


# -- the Schur product ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _coproduct_table(n, m, l, d):
    """Δ of each basis word of A_q(n,l)_d with middle m, as (left, right, coeff) indices."""
    left_idx = qm._basis_index(n, m, d)
    right_idx = qm._basis_index(m, l, d)
    table = []
    for w in qm.degree_basis(n, l, d):
        t = qm.coproduct_leg(qm.QTensor([(n, l)], {(w,): 1}), 0, m)
        table.append(
            tuple((left_idx[a], right_idx[b], RatFunc.coerce(c)) for (a, b), c in t.terms.items())
        )
    return table


def _schur_functionals(f, g):
    if f.d != g.d or f.m != g.n:
        raise ValueError("functionals cannot be composed: degree or middle dimension differs")
    vals = []
    for entries in _coproduct_table(f.n, f.m, g.m, f.d):
        acc = RatFunc.coerce(0)
        for a, b, c in entries:
            x, y = f.values[a], g.values[b]
            if x and y:
                acc = acc + c * x * y
        vals.append(acc)
    return qm.QFunctional(f.n, g.m, f.d, vals)


def _root(size, d):
    for k in range(1, size + 1):
        if k**d == size:
            return k
    raise ValueError(f"{size} is not a {d}-th power")


def schur_product(a, b, d=None):
    """The product a∘b in the q-Schur spaces, computed through the coproduct.

    Accepts two :class:`QFunctional` (returns one) or two intertwiner matrices
    of degree ``d`` (returns the intertwiner of the product functional).
    """
    if isinstance(a, qm.QFunctional):
        return _schur_functionals(a, b)
    if d is None:
        raise ValueError("degree d is required for matrix arguments")
    if a.cols != b.rows:
        raise ValueError("middle dimensions differ")
    n, m, l = _root(a.rows, d), _root(a.cols, d), _root(b.cols, d)
    f = qm.intertwiner_to_functional(a, n, m, d)
    g = qm.intertwiner_to_functional(b, m, l, d)
    return qm.functional_to_intertwiner(_schur_functionals(f, g))


# -- functor objects ------------------------------------------------------------------


@dataclass(frozen=True)
class Functor:
    """Symbolic quantum polynomial functor; build with the helpers below."""

    kind: str
    degree: int
    args: tuple = ()

    def __str__(self):
        k, d, a = self.kind, self.degree, self.args
        if k in ("tensor", "sym", "ext", "div"):
            return {"tensor": "⊗", "sym": "S", "ext": "Λ", "div": "Γ"}[k] + f"^{d}"
        if k == "gamma":
            return f"Γ^{{{d},{a[0]}}}"
        if k == "product":
            return f"({a[0]} ⊗ {a[1]})"
        if k == "dual":
            return f"{a[0]}^#"
        return f"Im({a[0]} -> {a[1]})"


def tensor_power(d):
    return Functor("tensor", d)


def identity_functor():
    return tensor_power(1)


def sym_power(d):
    return Functor("sym", d)


def ext_power(d):
    return Functor("ext", d)


def divided_power(d):
    return Functor("div", d)


def gamma(d, m):
    return Functor("gamma", d, (m,))


def tensor_product(F, G):
    return Functor("product", F.degree + G.degree, (F, G))


def product(*Fs):
    out = Fs[0]
    for G in Fs[1:]:
        out = tensor_product(out, G)
    return out


def dual_functor(F):
    if F.kind == "gamma":
        raise ValueError("Γ^{d,m} has no tensor-space presentation to dualise")
    return Functor("dual", F.degree, (F,))


def image(F, G, twist=None):
    """Image of G's projection ∘ T_twist ∘ F's canonical embedding into ⊗^d.

    The canonical embedding is the inclusion for Γ and ⊗, the
    antisymmetrisation ē_I -> e_I.y_d for Λ and ē_I -> e_I.x_d for S,
    extended over tensor products.
    """
    if F.degree != G.degree:
        raise ValueError("source and target degrees differ")
    twist = twist or Perm.identity(F.degree)
    return Functor("image", F.degree, (F, G, twist))


@dataclass(frozen=True)
class Presentation:
    n: int
    degree: int
    incl: ExactMatrix
    proj: ExactMatrix

    @property
    def dim(self):
        return self.incl.cols


@dataclass(frozen=True)
class GammaCarrier:
    """Γ^{d,m}(n) = Hom(m, n) in degree d."""

    n: int
    space: IntertwinerSpace

    @property
    def dim(self):
        return self.space.dim


def increasing_indices(n, d, strict):
    if strict:
        return list(itertools.combinations(range(1, n + 1), d))
    return list(itertools.combinations_with_replacement(range(1, n + 1), d))


def _basis_columns(indices, n, N):
    return ExactMatrix.from_columns([{index_of(I, n): 1} for I in indices], N)


def _divided(d, n):
    """∩ Ker(T_i - q), with basis normalised to be the identity on increasing rows."""
    N = n**d
    rows = []
    for R in rho_generators(d, n):
        for r in (R - ExactMatrix.identity(N).scale(_Q)).sparse_rows():
            if r:
                rows.append(r)
    _, vecs = kernel_sparse(rows, N)
    K = ExactMatrix.from_columns(vecs, N)
    reps = [index_of(I, n) for I in increasing_indices(n, d, strict=False)]
    if len(reps) != K.cols:
        raise ArithmeticError("divided power dimension disagrees with the multiset count")
    incl = K @ K.submatrix(reps, range(K.cols)).inverse()
    proj = ExactMatrix.from_sparse_rows([{r: 1} for r in reps], N)
    return incl, proj


def _quotient(d, n, c, strict):
    """V_n^{⊗d} / Σ Im(T_i - c) with representatives e_I, I increasing."""
    N = n**d
    rows = []
    for R in rho_generators(d, n):
        for r in (R - ExactMatrix.identity(N).scale(c)).T.sparse_rows():
            if r:
                rows.append(r)
    _, vecs = kernel_sparse(rows, N)
    reps = increasing_indices(n, d, strict)
    if not vecs:
        return ExactMatrix.zeros(N, 0), ExactMatrix.zeros(0, N)
    A = ExactMatrix(vecs)
    cols = [index_of(I, n) for I in reps]
    if len(cols) != A.rows:
        raise ArithmeticError("quotient dimension disagrees with the representative count")
    B = A.submatrix(range(A.rows), cols)
    return _basis_columns(reps, n, N), B.inverse() @ A


def _left_inverse(C):
    """A left inverse of a full-column-rank C built from independent rows."""
    rows = pivot_columns(C.T)
    B = C.submatrix(rows, range(C.cols))
    sel = ExactMatrix.from_sparse_rows([{r: 1} for r in rows], C.rows)
    return B.inverse() @ sel


@lru_cache(maxsize=None)
def evaluate(F, n):
    """Presentation of F(n) (or a GammaCarrier for Γ^{d,m})."""
    d = F.degree
    N = n**d
    if F.kind == "tensor":
        ident = ExactMatrix.identity(N)
        return Presentation(n, d, ident, ident)
    if F.kind == "div":
        return Presentation(n, d, *_divided(d, n))
    if F.kind == "sym":
        return Presentation(n, d, *_quotient(d, n, _Q, strict=False))
    if F.kind == "ext":
        return Presentation(n, d, *_quotient(d, n, -_Q.inverse(), strict=True))
    if F.kind == "gamma":
        return GammaCarrier(n, intertwiner_space(F.args[0], n, d))
    if F.kind == "product":
        P, R = (_presentation(G, n) for G in F.args)
        return Presentation(n, d, P.incl.kron(R.incl), P.proj.kron(R.proj))
    if F.kind == "dual":
        P = _presentation(F.args[0], n)
        return Presentation(n, d, P.proj.T, P.incl.T)
    if F.kind == "image":
        src, tgt, twist = F.args
        T = _presentation(tgt, n)
        morph = T.proj @ rho(d, n, twist) @ canonical_embedding(src, n)
        piv = pivot_columns(morph)
        if not piv:
            return Presentation(n, d, ExactMatrix.zeros(N, 0), ExactMatrix.zeros(0, N))
        C = morph.submatrix(range(morph.rows), piv)
        return Presentation(n, d, T.incl @ C, _left_inverse(C) @ T.proj)
    raise ValueError(f"unknown functor kind {F.kind!r}")


def _presentation(F, n):
    P = evaluate(F, n)
    if not isinstance(P, Presentation):
        raise ValueError(f"{F} cannot be nested inside another construction")
    return P


@lru_cache(maxsize=None)
def canonical_embedding(F, n):
    """The natural map F(n) -> V_n^{⊗d} used as the source of an image."""
    d = F.degree
    N = n**d
    if F.kind == "tensor":
        return ExactMatrix.identity(N)
    if F.kind == "div":
        return evaluate(F, n).incl
    if F.kind in ("ext", "sym"):
        strict = F.kind == "ext"
        h = antisymmetrizer(d) if strict else symmetrizer(d)
        cols = []
        for I in increasing_indices(n, d, strict):
            cols.append({index_of(J, n): v for J, v in act(I, h, n).items()})
        return ExactMatrix.from_columns(cols, N)
    if F.kind == "product":
        A, B = (canonical_embedding(G, n) for G in F.args)
        return A.kron(B)
    raise ValueError(f"{F} has no canonical embedding into tensor space")


def dimension(F, n):
    return evaluate(F, n).dim


def induced_map(F, X, m=None, n=None, check=True):
    """F(X): F(m) -> F(n) for an intertwiner X: V_m^{⊗d} -> V_n^{⊗d}."""
    d = F.degree
    m = m or _root(X.cols, d)
    n = n or _root(X.rows, d)
    if check and not is_intertwiner(X, m, n, d):
        raise ValueError("X does not commute with the Hecke action")
    if F.kind == "gamma":
        src, tgt = evaluate(F, m).space, evaluate(F, n).space
        cols = [tgt.coordinates(schur_product(X, Y, d)) for Y in src.basis]
        return ExactMatrix.from_columns(cols, tgt.dim)
    return evaluate(F, n).proj @ X @ evaluate(F, m).incl


def natural_map(F, G, n):
    """proj_G ∘ incl_F: the comparison map F(n) -> G(n) through tensor space."""
    return _presentation(G, n).proj @ _presentation(F, n).incl


# -- weights --------------------------------------------------------------------------


def compositions(d, n):
    """Compositions of d into n nonnegative parts, lexicographically decreasing."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in compositions(d - first, n - 1):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def weight_idempotents(n, d):
    """{composition: projection of V_n^{⊗d} onto the span of e_I of that content}."""
    basis = tensor_basis(n, d)
    out = {}
    for comp in compositions(d, n):
        diag = [1 if content(I, n) == comp else 0 for I in basis]
        out[comp] = ExactMatrix.diagonal(diag)
    return out


def weight_dimension(F, n, comp):
    """Rank of 1_comp acting on F(n)."""
    return induced_map(F, weight_idempotents(n, F.degree)[comp], n, n, check=False).rank()


# -- braiding -------------------------------------------------------------------------


def braiding(F, G, n):
    """R_{F,G}(n): F(n) ⊗ G(n) -> G(n) ⊗ F(n), induced by T_w with w the block swap."""
    d, e = F.degree, G.degree
    T = rho(d + e, n, block_swap(d, e))
    return _presentation(tensor_product(G, F), n).proj @ T @ _presentation(tensor_product(F, G), n).incl


def sigma_value(a, b):
    """The braiding form on generators: σ(x_{ij}, x_{kl})."""
    (i, j), (k, l) = a, b
    if i == j and k == l:
        return _Q if i == k else _ONE
    if i == l and j == k and i < j:
        return _Q - _Q.inverse()
    return RatFunc.coerce(0)


def sigma_form(n):
    """All nonzero values of σ on pairs of generators of A_q(n, n)_1."""
    gens = [qm.QVar(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out = {}
    for a in gens:
        for b in gens:
            v = sigma_value(a, b)
            if v:
                out[(a, b)] = v
    return out


def r_from_sigma(n):
    """R(v ⊗ w) = Σ σ(v_1, w_1) w_0 ⊗ v_0 for the coaction e_i -> Σ_j e_j ⊗ x_{ji}."""
    cols = []
    for a, b in tensor_basis(n, 2):
        col = {}
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                v = sigma_value((j, a), (k, b))
                if v:
                    col[index_of((k, j), n)] = v
        cols.append(col)
    return ExactMatrix.from_columns(cols, n * n)


# -- comodule structure -------------------------------------------------------------------


@dataclass(frozen=True)
class Comodule:
    """F''_{m,n}: v -> Σ_b F(X_b) v ⊗ a_b over the monomial basis a_b of A_q(n,m)_d."""

    functor: Functor
    m: int
    n: int
    words: tuple
    maps: tuple

    def apply(self, v):
        """Image of a coordinate vector of F(m) as {word: vector in F(n)}."""
        out = {}
        for w, A in zip(self.words, self.maps):
            img = A @ v
            if any(img):
                out[w] = img
        return out


@lru_cache(maxsize=None)
def dual_basis_intertwiners(n, m, d):
    """X_b for each monomial a_b of A_q(n, m)_d, so that <X_b, a_c> = δ_bc."""
    size = len(qm.degree_basis(n, m, d))
    out = []
    for k in range(size):
        vals = [0] * size
        vals[k] = 1
        out.append(qm.functional_to_intertwiner(qm.QFunctional(n, m, d, vals)))
    return tuple(out)


@lru_cache(maxsize=None)
def comodule_structure(F, m, n):
    d = F.degree
    words = qm.degree_basis(n, m, d)
    Xs = dual_basis_intertwiners(n, m, d)
    maps = tuple(induced_map(F, X, m, n, check=False) for X in Xs)
    return Comodule(F, m, n, words, maps)


def comodule_counit_holds(F, n):
    """(1 ⊗ ε) ∘ F''_{n,n} = id."""
    C = comodule_structure(F, n, n)
    k = evaluate(F, n).dim
    acc = ExactMatrix.zeros(k, k)
    for w, A in zip(C.words, C.maps):
        if all(v.row == v.col for v in w):
            acc = acc + A
    return acc == ExactMatrix.identity(k)


def comodule_coassociative(F, l, m, n):
    """(1 ⊗ Δ) ∘ F''_{l,n} = (F''_{m,n} ⊗ 1) ∘ F''_{l,m}, compared coefficientwise."""
    d = F.degree
    big = comodule_structure(F, l, n)
    left = comodule_structure(F, m, n)
    right = comodule_structure(F, l, m)
    kn, kl = evaluate(F, n).dim, evaluate(F, l).dim
    lhs = {}
    for A, entries in zip(big.maps, _coproduct_table(n, m, l, d)):
        for a, b, c in entries:
            key = (a, b)
            lhs[key] = lhs.get(key, ExactMatrix.zeros(kn, kl)) + A.scale(c)
    for a, Aa in enumerate(left.maps):
        for b, Ab in enumerate(right.maps):
            rhs = Aa @ Ab
            if lhs.get((a, b), ExactMatrix.zeros(kn, kl)) != rhs:
                return False
    return True


# -- double centralizer --------------------------------------------------------------------


def hecke_span_dim(n, d):
    """Dimension of the span of all ρ(T_w) on V_n^{⊗d}."""
    rows = [dict(enumerate(rho(d, n, w).flatten())) for w in all_perms(d)]
    rows = [{j: v for j, v in r.items() if v} for r in rows]
    return elim.rank(rows, (n**d) ** 2)


@dataclass(frozen=True)
class CommutantReport:
    n: int
    d: int
    commutant_dim: int
    hecke_dim: int
    equations_used: int
    spans_equal: bool


def _commutant_equations(n, d, var):
    """Per basis intertwiner X, the sparse rows of Y X - X Y = 0."""
    N = n**d
    for X in intertwiner_space(n, n, d).basis:
        xr = [[(K, x) for K, x in enumerate(row) if x] for row in X.entries]
        xc = [[(K, X[K, I]) for K in range(N) if X[K, I]] for I in range(N)]
        eqs = []
        for J in range(N):
            for I in range(N):
                eq = {}
                for K, x in xc[I]:  # (Y X)[J, I] = Σ_K Y[J, K] X[K, I]
                    u = var.get((J, K))
                    if u is not None:
                        eq[u] = eq.get(u, RatFunc.coerce(0)) + x
                for K, x in xr[J]:  # (X Y)[J, I] = Σ_K X[J, K] Y[K, I]
                    u = var.get((K, I))
                    if u is not None:
                        eq[u] = eq.get(u, RatFunc.coerce(0)) - x
                eq = {u: v for u, v in eq.items() if v}
                if eq:
                    eqs.append(eq)
        yield eqs


def commutant(n, d, early_stop=True, seed=0):
    """Commutant of the q-Schur algebra S_q(n, n; d) acting on V_n^{⊗d}.

    The weight idempotents lie in the algebra, so the unknown Y is block
    diagonal by content.  Equations Y X_b = X_b Y are added one intertwiner at
    a time; rows independent after a random specialisation are kept.  With
    ``early_stop`` the loop ends once the kept rows leave a kernel no larger
    than the Hecke span; since every ρ(T_w) solves all equations, the kernel
    then equals that span.
    """
    basis = tensor_basis(n, d)
    N = len(basis)
    cont = [content(I, n) for I in basis]
    var = {}
    for J in range(N):
        for I in range(N):
            if cont[J] == cont[I]:
                var[(J, I)] = len(var)
    U = len(var)
    hdim = hecke_span_dim(n, d)
    target = U - hdim
    elimr = elim.ModularEliminator(elim.random_point(seed))
    kept = []
    saturated = False
    for eqs in _commutant_equations(n, d, var):
        for eq in eqs:
            if elimr.add(eq):
                kept.append(eq)
        if early_stop and elimr.rank == target:
            saturated = True
            break
    if not saturated:
        # rows dropped as dependent mod p might still be independent over Q(q)
        kept = [eq for eqs in _commutant_equations(n, d, var) for eq in eqs]
    ker = elim.kernel(kept, U)
    inv = {u: key for key, u in var.items()}
    flat = []
    for _, vec in ker:
        row = {}
        for u, v in vec.items():
            J, I = inv[u]
            row[J * N + I] = v
        flat.append(row)
    for w in all_perms(d):
        T = rho(d, n, w)
        flat.append({J * N + I: T[J, I] for J in range(N) for I in range(N) if T[J, I]})
    joint = elim.rank(flat, N * N)
    return CommutantReport(n, d, len(ker), hdim, len(kept), joint == len(ker) == hdim)


# -- representability -----------------------------------------------------------------------


def gamma_decomposition_rhs(d, n, m):
    """Σ over compositions of d into n parts of Π dim Γ^{d_i}(m)."""
    total = 0
    for comp in compositions(d, n):
        prod = 1
        for part in comp:
            prod *= comb(m + part - 1, part)
        total += prod
    return total
