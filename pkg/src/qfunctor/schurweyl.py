"""Partitions, quantum Schur and Weyl functors, and dimension identities for them.

``schur_functor(λ, n)`` is the image of

    Λ^{λ'} --α--> ⊗^d --T_{σ_{λ'}}--> ⊗^d --q_λ--> S^λ,

and ``weyl_functor(λ, n)`` the image of

    Γ^λ --i--> ⊗^d --T_{σ_λ}--> ⊗^d --p_{λ'}--> Λ^{λ'},

where Λ^μ = Λ^{μ_1} ⊗ Λ^{μ_2} ⊗ ... and likewise for S and Γ.  Both have
dimension equal to the number of semistandard tableaux of shape λ with
entries at most n, and the two images are dual to each other.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from . import polyfunctor as pf
from .braidrep import (
    Perm,
    all_perms,
    act,
    antisymmetrizer,
    index_of,
    rho,
    symmetrizer,
    tensor_basis,
)
from .exactalg import ExactMatrix, LaurentPoly, RatFunc
from .exactalg import elim
from .exactalg.matrix import fraction_rank
from .report import check

_MQINV = RatFunc.coerce(LaurentPoly({-1: -1}))


# -- partitions and tableaux ------------------------------------------------------------


def validate_partition(parts):
    parts = tuple(parts)
    if not parts or any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition with positive weakly decreasing parts")
    return parts


def conjugate(lam):
    lam = validate_partition(lam)
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions(d, max_part=None):
    """Partitions of d in lexicographically decreasing order."""
    if d == 0:
        return [()]
    max_part = d if max_part is None else max_part
    out = []
    for k in range(min(d, max_part), 0, -1):
        for rest in partitions(d - k, k):
            out.append((k,) + rest)
    return out


def canonical_permutation(lam):
    """Column reading word of the tableau with rows filled 1..|λ| in order."""
    lam = validate_partition(lam)
    rows, k = [], 1
    for p in lam:
        rows.append(range(k, k + p))
        k += p
    return Perm(rows[r][c] for c in range(lam[0]) for r in range(len(lam)) if c < lam[r])


def _cells(lam):
    return [(r, c) for r, p in enumerate(lam) for c in range(p)]


@lru_cache(maxsize=None)
def ssyt_count(lam, n):
    """Semistandard tableaux of shape λ, entries in 1..n (backtracking)."""
    lam = validate_partition(lam)
    cells = _cells(lam)
    filling = {}

    def fill(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, filling[(r, c - 1)])
        if r:
            lo = max(lo, filling[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            total += fill(k + 1)
        filling.pop((r, c), None)
        return total

    return fill(0)


@lru_cache(maxsize=None)
def syt_count(lam):
    """Standard tableaux of shape λ (backtracking over placements of 1..|λ|)."""
    lam = validate_partition(lam)
    rows = [0] * len(lam)

    def place(k):
        if k == 0:
            return 1
        total = 0
        for r in range(len(lam)):
            if rows[r] < lam[r] and (r == 0 or rows[r - 1] > rows[r]):
                rows[r] += 1
                total += place(k - 1)
                rows[r] -= 1
        return total

    return place(sum(lam))


# -- q-wedge calculus -----------------------------------------------------------------------


def antisymmetrization(d, n):
    """α_d(n): ē_I -> Σ_w (-q^-1)^{ℓ(w)} e_{I.w} over strictly increasing I."""
    cols = []
    for I in pf.increasing_indices(n, d, strict=True):
        col = {}
        for w in all_perms(d):
            col[index_of(w.act(I), n)] = _MQINV ** w.length()
        cols.append(col)
    return ExactMatrix.from_columns(cols, n**d)


def wedge(I, n):
    """The class ē_I in the carrier of Λ^{|I|}(n)."""
    d = len(I)
    P = pf.evaluate(pf.ext_power(d), n).proj
    return P.column(index_of(I, n))


def hecke_image_columns(h, n, indices):
    """Columns e_I . h for the given multi-indices."""
    return ExactMatrix.from_columns(
        [{index_of(J, n): v for J, v in act(I, h, n).items()} for I in indices], n ** h.degree
    )


# -- Schur and Weyl functors ------------------------------------------------------------------


@dataclass(frozen=True)
class SchurData:
    shape: tuple
    n: int
    kind: str
    functor: pf.Functor
    composition: ExactMatrix  # source carrier -> target carrier
    image_basis: tuple  # vectors in the target carrier

    @property
    def dim(self):
        return len(self.image_basis)


def _power(kind, parts):
    make = {"ext": pf.ext_power, "sym": pf.sym_power, "div": pf.divided_power}[kind]
    return pf.product(*[make(p) for p in parts])


def schur_functor_object(lam):
    lam = validate_partition(lam)
    lc = conjugate(lam)
    return pf.image(_power("ext", lc), _power("sym", lam), canonical_permutation(lc))


def weyl_functor_object(lam):
    lam = validate_partition(lam)
    lc = conjugate(lam)
    return pf.image(_power("div", lam), _power("ext", lc), canonical_permutation(lam))


def _schur_data(kind, lam, F, n):
    src, tgt, twist = F.args
    d = F.degree
    comp = pf.evaluate(tgt, n).proj @ rho(d, n, twist) @ pf.canonical_embedding(src, n)
    piv = elim.rref(comp.sparse_rows(), comp.cols)[1]
    return SchurData(tuple(lam), n, kind, F, comp, tuple(comp.column(j) for j in piv))


def schur_functor(lam, n):
    lam = validate_partition(lam)
    return _schur_data("schur", lam, schur_functor_object(lam), n)


def weyl_functor(lam, n):
    lam = validate_partition(lam)
    return _schur_data("weyl", lam, weyl_functor_object(lam), n)


def sw_pairing(lam, n):
    """The pairing matrix between W_λ(n) and S_λ(n), plus a well-definedness flag.

    W sits in the carrier of Λ^{λ'}(n); its ambient lifts v pair with a
    preimage a of each S basis vector through v^T α(a).  This is independent
    of the preimage exactly when v^T α kills ker(C_S).
    """
    lc = conjugate(lam)
    S, W = schur_functor(lam, n), weyl_functor(lam, n)
    ext = _power("ext", lc)
    lift = pf.evaluate(ext, n).incl
    alpha = pf.canonical_embedding(ext, n)
    C = S.composition
    piv = elim.rref(C.sparse_rows(), C.cols)[1]
    # S basis vectors are the pivot columns of C, so a_j = e_{piv[j]}
    lifts = lift @ ExactMatrix.from_columns(list(W.image_basis), lift.cols)
    full = lifts.T @ alpha
    well_defined = all(not any(full @ k) for k in C.kernel())
    pairing = full.submatrix(range(full.rows), piv)
    return pairing, well_defined


def verify_sw_duality(lam, n):
    lam = validate_partition(lam)
    S, W = schur_functor(lam, n), weyl_functor(lam, n)
    pairing, ok = sw_pairing(lam, n)
    return [
        check(f"dim W_{lam}({n}) = dim S_{lam}({n})", W.dim, S.dim),
        check(f"pairing W_{lam}({n}) x S_{lam}({n}) is well defined", ok, True),
        check(f"pairing W_{lam}({n}) x S_{lam}({n}) has full rank", pairing.rank(), S.dim),
    ]


# -- invariant theory --------------------------------------------------------------------------


def cauchy_sum(m, n, d):
    return sum(ssyt_count(lam, m) * ssyt_count(lam, n) for lam in partitions(d) if len(lam) <= min(m, n))


def verify_cauchy(m, n, d, with_intertwiners=True):
    out = [check(f"C({m}*{n}+{d}-1,{d}) = Σ ssyt(λ,{m}) ssyt(λ,{n})", comb(m * n + d - 1, d), cauchy_sum(m, n, d))]
    if with_intertwiners:
        out.append(
            check(
                f"dim Hom(V_{n}^⊗{d}, V_{m}^⊗{d}) = Σ ssyt(λ,{m}) ssyt(λ,{n})",
                pf.intertwiner_space(n, m, d).dim,
                cauchy_sum(m, n, d),
            )
        )
    return out


def composition_rank(l, m, n, d):
    """Rank of the span of all Y X, X in Hom(l -> m), Y in Hom(m -> n)."""
    Xs = pf.intertwiner_space(l, m, d).basis
    Ys = pf.intertwiner_space(m, n, d).basis
    rows = []
    for Y in Ys:
        for X in Xs:
            flat = (Y @ X).flatten()
            rows.append({j: v for j, v in enumerate(flat) if v})
    return elim.rank(rows, (n**d) * (l**d))


def verify_fft(l, m, n, d):
    rhs = sum(ssyt_count(lam, l) * ssyt_count(lam, n) for lam in partitions(d) if len(lam) <= min(l, m, n))
    return [check(f"rank of composition Hom({l}->{m}) x Hom({m}->{n}), d={d}", composition_rank(l, m, n, d), rhs)]


def hecke_image_dim(m, d):
    """Rank of the d! flattened operators ρ(T_w) on V_m^{⊗d}."""
    return pf.hecke_span_dim(m, d)


def verify_jimbo_sw(m, d):
    shapes = [lam for lam in partitions(d) if len(lam) <= m]
    return [
        check(f"{m}^{d} = Σ ssyt(λ,{m}) syt(λ)", m**d, sum(ssyt_count(lam, m) * syt_count(lam) for lam in shapes)),
        check(f"dim image of H_{d} on V_{m}^⊗{d} = Σ syt(λ)^2", hecke_image_dim(m, d), sum(syt_count(lam) ** 2 for lam in shapes)),
    ]


def simple_dim(lam, m):
    """dim L_λ(m) at generic q, read off the Schur functor image (zero iff ℓ(λ) > m)."""
    return schur_functor(lam, m).dim


# -- classical limit ------------------------------------------------------------------------------


def classical_ranks(d, n):
    """Ranks of ρ(x_d) and ρ(y_d) at q = 1, against C(n+d-1,d) and C(n,d)."""
    x = symmetrizer(d).rho(n).evaluate_at(1)
    y = antisymmetrizer(d).rho(n).evaluate_at(1)
    return fraction_rank(x), fraction_rank(y)


def classical_tensor_action(d, n, w):
    """ρ(T_w) at q = 1 as a Fraction matrix; should be the permutation e_I -> e_{I.w}."""
    return rho(d, n, w).evaluate_at(1)


def classical_permutation_matrix(d, n, w):
    basis = tensor_basis(n, d)
    N = len(basis)
    M = [[0] * N for _ in range(N)]
    for I in basis:
        M[index_of(w.act(I), n)][index_of(I, n)] = 1
    return M


def hecke_dimension(d):
    return factorial(d)
