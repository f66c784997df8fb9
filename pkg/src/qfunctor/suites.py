"""Named verification suites; each returns a list of :class:`Check` records."""

import random
from math import comb, factorial

from . import polyfunctor as pf
from . import qmatrix as qm
from . import schurweyl as sw
from .braidrep import (
    Perm,
    all_perms,
    act,
    antisymmetrizer,
    index_of,
    random_reduced_word,
    reduced_word,
    rho,
    standard_R,
    tensor_basis,
)
from .exactalg import ExactMatrix, LaurentPoly, RatFunc
from .report import check
from .ybspace import YBSpace, is_yang_baxter, satisfies_hecke, spectrum, tensor_power_space

_Q = RatFunc.coerce(LaurentPoly({1: 1}))


def hecke_suite(max_n=4, max_d=4, seed=0):
    out = []
    for n in range(1, max_n + 1):
        S = YBSpace.standard(n)
        out.append(check(f"(R_{n} - q)(R_{n} + q^-1) = 0", satisfies_hecke(S), True))
        r1, r2 = rho(3, n, 1), rho(3, n, 2)
        out.append(check(f"braid relation on V_{n}^⊗3", r1 @ r2 @ r1 == r2 @ r1 @ r2, True))
    rng = random.Random(seed)
    d = 4
    for _ in range(10):
        w = Perm(rng.sample(range(1, d + 1), d))
        a = reduced_word(w)
        b = a
        for _ in range(20):
            b = random_reduced_word(w, rng)
            if b != a:
                break
        same = rho(d, 2, a) == rho(d, 2, b)
        out.append(check(f"T_{w} independent of reduced word ({a} vs {b})", same, True))
    return out


def yb_suite(max_n=3, max_d=2):
    out = []
    for n in range(1, max_n + 1):
        S = YBSpace.standard(n)
        out.append(check(f"V_{n} is a Yang-Baxter space", is_yang_baxter(S), True))
        found = spectrum(S, 2).as_dict()
        want = {"q": n * (n + 1) // 2}
        if n > 1:
            want["-q^-1"] = n * (n - 1) // 2
        out.append(check(f"spectrum of R_{n}", found, want))
        for d in range(2, max_d + 1):
            T = tensor_power_space(S, d)
            out.append(check(f"(V_{n})^⊗{d} is a Yang-Baxter space", is_yang_baxter(T), True))
    return out


def confluence_suite(max_n=3, max_d=3, words=200, seed=0):
    out = []
    rng = random.Random(seed)
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            gens = [(j, i) for j in range(1, m + 1) for i in range(1, n + 1)]
            bad = 0
            for _ in range(words):
                w = [rng.choice(gens) for _ in range(3)]
                if qm.normal_form(w, (m, n)) != qm.normal_form_random(w, (m, n), rng):
                    bad += 1
            out.append(check(f"confluence on {words} degree-3 words of A_q({m},{n})", bad, 0))
            for d in range(0, max_d + 1):
                out.append(
                    check(f"|basis A_q({m},{n})_{d}| = C(mn+d-1,d)", len(qm.degree_basis(m, n, d)), comb(m * n + d - 1, d))
                )
    return out


def basis_suite(max_n=3, max_d=3):
    """dim A_q(m,n)_d = C(mn+d-1,d) = dim Hom_B(V_n^⊗d, V_m^⊗d)."""
    out = []
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            for d in range(1, max_d + 1):
                a = len(qm.degree_basis(m, n, d))
                out.append(check(f"dim A_q({m},{n})_{d} = C({m * n}+{d}-1,{d})", a, comb(m * n + d - 1, d)))
                out.append(check(f"dim A_q({m},{n})_{d} = dim Hom(V_{n}^⊗{d}, V_{m}^⊗{d})", a, pf.intertwiner_space(n, m, d).dim))
    return out


def pairing_suite(max_n=2, max_d=2, pairs=10, seed=0):
    out = []
    rng = random.Random(seed)
    d = max_d
    n = m = l = max_n
    A = pf.intertwiner_space(m, n, d).basis
    B = pf.intertwiner_space(l, m, d).basis
    for _ in range(pairs):
        i, j = rng.randrange(len(A)), rng.randrange(len(B))
        X, Y = A[i], B[j]
        out.append(check(f"schur_product(X{i}, Y{j}) = X{i} Y{j}", pf.schur_product(X, Y, d) == X @ Y, True))
    # the pairing vanishes on the defining relations
    gens = [(j, i) for j in range(1, n + 1) for i in range(1, m + 1)]
    space = pf.intertwiner_space(m, n, d)
    for _ in range(pairs):
        coords = [rng.randint(-2, 2) for _ in range(space.dim)]
        X = space.combination(coords)
        w = [rng.choice(gens) for _ in range(d)]
        raw = qm.pairing(X, w, n, m)
        nf = qm.pairing(X, qm.normal_form(w, (n, m)))
        out.append(check(f"<X, {w}> agrees with <X, normal form>", raw, nf))
    # φ_J ∘ φ_I = φ_{I ∩ J}
    subsets = [(), (1,), (2,), (1, 2)]
    for I in subsets:
        for J in subsets:
            lhs = pf.schur_product(qm.phi_functional(J, n, n, d), qm.phi_functional(I, n, n, d))
            rhs = qm.phi_functional(set(I) & set(J), n, n, d)
            out.append(check(f"φ_{J} ∘ φ_{I} = φ_{tuple(sorted(set(I) & set(J)))}", lhs == rhs, True))
    out.extend(inclusion_exclusion_checks(max_d=max_d))
    out.extend(counit_checks(max_n=max_n, max_d=max_d))
    return out


def inclusion_exclusion_checks(max_d=2):
    out = []
    for d in range(1, max_d + 1):
        m = d + 1
        terms = qm.inclusion_exclusion_terms(m, d)
        acc = qm.phi_functional((), m, m, d).scale(0)
        for I, c in terms.items():
            acc = acc + qm.phi_functional(I, m, m, d).scale(c)
        out.append(check(f"φ_(1..{m}) as a combination of φ_I, |I| <= {d}", acc == qm.phi_functional(range(1, m + 1), m, m, d), True))
    return out


def counit_checks(max_n=2, max_d=2):
    """(ε ⊗ 1)Δ = id = (1 ⊗ ε)Δ on every basis monomial."""
    out = []
    for n in range(1, max_n + 1):
        for d in range(0, max_d + 1):
            ok = True
            for w in qm.degree_basis(n, n, d):
                t = qm.coproduct(qm.QMatrixElement((n, n), {w: 1}, reduced=True), n)
                left = qm.counit_leg(t, 0)
                right = qm.counit_leg(t, 1)
                want = qm.QTensor([(n, n)], {(w,): LaurentPoly({0: 1})})
                ok &= left == want and right == want
            out.append(check(f"counit diagrams on A_q({n},{n})_{d}", ok, True))
    return out


def cauchy_suite(max_n=3, max_d=4):
    out = []
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            for d in range(1, max_d + 1):
                out.extend(sw.verify_cauchy(m, n, d, with_intertwiners=d <= 3))
    return out


def fft_suite(max_n=2, max_d=2):
    out = []
    for l in range(1, max_n + 1):
        for m in range(1, max_n + 1):
            for n in range(1, max_n + 1):
                for d in range(1, max_d + 1):
                    out.extend(sw.verify_fft(l, m, n, d))
    return out


def jsw_suite(max_n=3, max_d=4):
    out = []
    for m in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            out.extend(sw.verify_jimbo_sw(m, d))
            for lam in sw.partitions(d):
                if len(lam) > m:
                    out.append(check(f"L_{lam}({m}) = 0 since ℓ(λ) > {m}", sw.simple_dim(lam, m), 0))
    return out


def natural_iso_checks(F, G, ns=(1, 2)):
    """The comparison maps proj_G incl_F are invertible and natural for m, n in ns."""
    out = []
    for n in ns:
        phi = pf.natural_map(F, G, n)
        ok = phi.is_square() and phi.rank() == phi.rows
        out.append(check(f"{F} -> {G} invertible at n={n}", ok, True))
    d = F.degree
    for m in ns:
        for n in ns:
            good = True
            for X in pf.intertwiner_space(m, n, d).basis:
                lhs = pf.induced_map(G, X, m, n, check=False) @ pf.natural_map(F, G, m)
                rhs = pf.natural_map(F, G, n) @ pf.induced_map(F, X, m, n, check=False)
                good &= lhs == rhs
            out.append(check(f"{F} -> {G} natural for {m} -> {n}", good, True))
    return out


def duality_suite(max_n=3, max_d=3):
    out = []
    for d in range(1, max_d + 1):
        good = all(
            rho(d, n, w).T == rho(d, n, w.inverse()) for w in all_perms(d) for n in range(1, min(max_n, 3) + 1)
        )
        out.append(check(f"(T_w)^# = T_(w^-1) for all w in S_{d}", good, True))
        for n in range(1, max_n + 1):
            S, G, L = pf.sym_power(d), pf.divided_power(d), pf.ext_power(d)
            Sd, Ld = pf.dual_functor(S), pf.dual_functor(L)
            out.append(check(f"dim (S^{d})^#({n}) = dim Γ^{d}({n})", pf.dimension(Sd, n), pf.dimension(G, n)))
            out.append(check(f"dim (Λ^{d})^#({n}) = dim Λ^{d}({n})", pf.dimension(Ld, n), pf.dimension(L, n)))
            pairing = pf.evaluate(G, n).incl.T @ pf.evaluate(S, n).incl
            out.append(check(f"Γ^{d}({n}) x S^{d}({n}) pairing rank", pairing.rank(), pf.dimension(S, n)))
        out.extend(natural_iso_checks(pf.dual_functor(pf.sym_power(d)), pf.divided_power(d), ns=range(1, min(max_n, 2) + 1)))
        out.extend(natural_iso_checks(pf.dual_functor(pf.ext_power(d)), pf.ext_power(d), ns=range(1, min(max_n, 2) + 1)))
    F, G = pf.sym_power(1), pf.ext_power(2)
    for n in (2, 3):
        lhs = pf.evaluate(pf.dual_functor(pf.tensor_product(F, G)), n)
        rhs = pf.evaluate(pf.tensor_product(pf.dual_functor(F), pf.dual_functor(G)), n)
        out.append(check(f"(S^1 ⊗ Λ^2)^# = (S^1)^# ⊗ (Λ^2)^# at n={n}", (lhs.incl, lhs.proj) == (rhs.incl, rhs.proj), True))
    for d in range(1, max_d + 1):
        for lam in sw.partitions(d):
            for n in range(1, max_n + 1):
                out.extend(sw.verify_sw_duality(lam, n))
    return out


def braiding_suite(max_n=2, max_d=4):
    out = []
    I = pf.identity_functor()
    for n in range(1, max_n + 1):
        out.append(check(f"R_(V,V) = R_{n}", pf.braiding(I, I, n) == standard_R(n), True))
        out.append(check(f"σ reproduces R_{n}", pf.r_from_sigma(n) == standard_R(n), True))
    # hexagons on tensor powers
    n = max_n
    for a in range(1, max_d):
        for b in range(1, max_d - a):
            for c in range(1, max_d - a - b + 1):
                U, V, W = pf.tensor_power(a), pf.tensor_power(b), pf.tensor_power(c)
                Ia, Ib, Ic = (ExactMatrix.identity(n**k) for k in (a, b, c))
                lhs = pf.braiding(U, pf.tensor_product(V, W), n)
                rhs = Ib.kron(pf.braiding(U, W, n)) @ pf.braiding(U, V, n).kron(Ic)
                out.append(check(f"R_(U,V⊗W) = (1⊗R_(U,W))(R_(U,V)⊗1), degrees {a},{b},{c}", lhs == rhs, True))
                lhs = pf.braiding(pf.tensor_product(U, V), W, n)
                rhs = pf.braiding(U, W, n).kron(Ib) @ Ia.kron(pf.braiding(V, W, n))
                out.append(check(f"R_(U⊗V,W) = (R_(U,W)⊗1)(1⊗R_(V,W)), degrees {a},{b},{c}", lhs == rhs, True))
    # naturality and duality compatibility
    kinds = [pf.tensor_power, pf.sym_power, pf.ext_power, pf.divided_power]
    for d in range(1, max_d):
        for e in range(1, max_d - d + 1):
            for mk_f in kinds:
                for mk_g in kinds:
                    F, G = mk_f(d), mk_g(e)
                    out.append(naturality_check(F, G, max_n))
                    for n in range(1, max_n + 1):
                        lhs = pf.braiding(F, G, n).T
                        rhs = pf.braiding(pf.dual_functor(G), pf.dual_functor(F), n)
                        out.append(check(f"(R_({F},{G}))^# = R_({G}^#,{F}^#) at n={n}", lhs == rhs, True))
    return out


def naturality_check(F, G, max_n=2):
    FG, GF = pf.tensor_product(F, G), pf.tensor_product(G, F)
    D = FG.degree
    good = True
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            Rm, Rn = pf.braiding(F, G, m), pf.braiding(F, G, n)
            for X in pf.intertwiner_space(m, n, D).basis:
                if pf.induced_map(GF, X, m, n, check=False) @ Rm != Rn @ pf.induced_map(FG, X, m, n, check=False):
                    good = False
                    break
    return check(f"R_({F},{G}) natural, m,n <= {max_n}", good, True)


def functor_suite(max_n=4, max_d=4):
    out = []
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            out.append(check(f"dim Λ^{d}({n}) = C({n},{d})", pf.dimension(pf.ext_power(d), n), comb(n, d)))
            out.append(check(f"dim Γ^{d}({n}) = C({n}+{d}-1,{d})", pf.dimension(pf.divided_power(d), n), comb(n + d - 1, d)))
            out.append(check(f"dim S^{d}({n}) = C({n}+{d}-1,{d})", pf.dimension(pf.sym_power(d), n), comb(n + d - 1, d)))
            out.append(check(f"dim ⊗^{d}({n}) = {n}^{d}", pf.dimension(pf.tensor_power(d), n), n**d))
    for d in range(1, min(max_d, 3) + 1):
        for n in range(1, min(max_n, 3) + 1):
            for m in range(1, min(max_n, 3) + 1):
                out.append(
                    check(
                        f"dim Γ^({d},{n})({m}) = Σ Π dim Γ^(d_i)({m})",
                        pf.dimension(pf.gamma(d, n), m),
                        pf.gamma_decomposition_rhs(d, n, m),
                    )
                )
    for d in range(1, min(max_d, 3) + 1):
        for n in range(1, min(max_n, 3) + 1):
            out.append(check(f"dim (S^{d})^#({n}) = dim Γ^{d}({n})", pf.dimension(pf.dual_functor(pf.sym_power(d)), n), comb(n + d - 1, d)))
            out.append(check(f"dim (Λ^{d})^#({n}) = dim Λ^{d}({n})", pf.dimension(pf.dual_functor(pf.ext_power(d)), n), comb(n, d)))
    out.extend(weight_checks(min(max_n, 3), min(max_d, 3)))
    return out


def weight_oracle(kind, comp):
    """dim F(n)_comp by counting: multinomial for ⊗, 0/1 vectors for Λ, one for S and Γ."""
    if kind == "tensor":
        d = sum(comp)
        out = factorial(d)
        for c in comp:
            out //= factorial(c)
        return out
    if kind == "ext":
        return 1 if all(c <= 1 for c in comp) else 0
    return 1


def weight_checks(max_n=3, max_d=3):
    out = []
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            idem = pf.weight_idempotents(n, d)
            N = n**d
            total = ExactMatrix.zeros(N, N)
            for P in idem.values():
                total = total + P
            out.append(check(f"weight idempotents sum to 1 on V_{n}^⊗{d}", total == ExactMatrix.identity(N), True))
            for kind, make in (("tensor", pf.tensor_power), ("ext", pf.ext_power), ("sym", pf.sym_power), ("div", pf.divided_power)):
                F = make(d)
                good = all(pf.weight_dimension(F, n, c) == weight_oracle(kind, c) for c in idem)
                out.append(check(f"weight dimensions of {F}({n})", good, True))
    return out


def comodule_suite():
    out = []
    T1 = pf.tensor_power(1)
    C = pf.comodule_structure(T1, 2, 2)
    good = True
    for i in range(2):
        e = [0, 0]
        e[i] = 1
        img = C.apply(tuple(RatFunc.coerce(x) for x in e))
        want = {(qm.QVar(j + 1, i + 1),): tuple(RatFunc.coerce(1 if k == j else 0) for k in range(2)) for j in range(2)}
        good &= img == want
    out.append(check("⊗^1 coaction e_i -> Σ e_j ⊗ x_ji", good, True))
    for F in (pf.ext_power(2), pf.sym_power(2), pf.tensor_power(2), pf.divided_power(2)):
        out.append(check(f"counit diagram for {F} at n=2", pf.comodule_counit_holds(F, 2), True))
        out.append(check(f"coassociativity for {F}, l=m=n=2", pf.comodule_coassociative(F, 2, 2, 2), True))
    return out


def centralizer_suite(cases=((2, 2), (3, 2), (3, 3))):
    out = []
    for n, d in cases:
        rep = pf.commutant(n, d)
        out.append(check(f"Hecke span on V_{n}^⊗{d} has dim {d}!", rep.hecke_dim, factorial(d)))
        out.append(check(f"commutant of S_q({n},{n};{d}) has dim {d}!", rep.commutant_dim, factorial(d)))
        out.append(check(f"commutant equals the Hecke span on V_{n}^⊗{d}", rep.spans_equal, True))
    return out


def schur_suite(max_n=3, max_d=4):
    out = []
    for d in range(1, max_d + 1):
        for lam in sw.partitions(d):
            for n in range(1, max_n + 1):
                want = sw.ssyt_count(lam, n)
                out.append(check(f"dim S_{lam}({n}) = ssyt", sw.schur_functor(lam, n).dim, want))
                out.append(check(f"dim W_{lam}({n}) = ssyt", sw.weyl_functor(lam, n).dim, want))
                out.extend(sw.verify_sw_duality(lam, n))
    out.extend(wedge_checks(max_n, max_d))
    return out


def wedge_checks(max_n=3, max_d=3):
    out = []
    mq = RatFunc.coerce(LaurentPoly({-1: -1}))
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            alpha = sw.antisymmetrization(d, n)
            via_y = sw.hecke_image_columns(antisymmetrizer(d), n, pf.increasing_indices(n, d, strict=True))
            out.append(check(f"α_{d}({n})(ē_I) = e_I . y_{d}", alpha == via_y, True))
            P = pf.evaluate(pf.ext_power(d), n)
            out.append(check(f"α_{d}({n}) = p_{d}^T", alpha == P.proj.T, True))
            G, S = pf.evaluate(pf.divided_power(d), n), pf.evaluate(pf.sym_power(d), n)
            out.append(check(f"i_{d}({n}) = q_{d}^T", G.incl == S.proj.T, True))
            repeats = [I for I in tensor_basis(n, d) if len(set(I)) < d]
            zero = all(not any(act(I, antisymmetrizer(d), n).values()) for I in repeats)
            out.append(check(f"e_I . y_{d} = 0 for repeated I, n={n}", zero, True))
            vanish = all(not any(sw.wedge(I, n)) for I in repeats)
            out.append(check(f"ē_I = 0 for repeated I, n={n}, d={d}", vanish, True))
            good = True
            for I in pf.increasing_indices(n, d, strict=True):
                base = sw.wedge(I, n)
                for w in all_perms(d):
                    c = mq ** w.length()
                    good &= sw.wedge(w.act(I), n) == tuple(c * x for x in base)
            out.append(check(f"ē_(I.σ) = (-q^-1)^ℓ(σ) ē_I, n={n}, d={d}", good, True))
    for d in range(1, max_d + 1):
        for n in range(1, max_n + 1):
            xs, ys = sw.classical_ranks(d, n)
            out.append(check(f"rank x_{d} at q=1 on V_{n}^⊗{d}", xs, comb(n + d - 1, d)))
            out.append(check(f"rank y_{d} at q=1 on V_{n}^⊗{d}", ys, comb(n, d)))
    return out


def spectrum_suite(rows=((2, 2), (3, 2), (4, 2), (2, 3))):
    from .ybspace import table_spectrum

    out = []
    for n, d in rows:
        rep = table_spectrum(n, d)
        out.append(check(f"spectrum of (V_{n}^⊗{d})^⊗2", rep.as_dict(), SPECTRUM_TABLE[(n, d)]))
    return out


SPECTRUM_TABLE = {
    (2, 2): {"q^-2": 1, "-1": 3, "-q^2": 3, "q^2": 4, "q^4": 5},
    (3, 2): {"-q^-2": 3, "q^-2": 9, "-1": 18, "-q^2": 15, "q^2": 21, "q^4": 15},
    (4, 2): {"q^-4": 1, "-q^-2": 15, "q^-2": 35, "-1": 60, "-q^2": 45, "q^2": 65, "q^4": 35},
    (2, 3): {
        "-q^-3": 1,
        "q^-1": 3,
        "-q^2": 6,
        "q^2": 6,
        "-q^3": 8,
        "q^3": 1,
        "-q^5": 3,
        "q^5": 9,
        "-q^6": 10,
        "q^6": 10,
        "q^9": 7,
    },
}


SUITES = {
    "hecke": hecke_suite,
    "yb": yb_suite,
    "confluence": confluence_suite,
    "basis": basis_suite,
    "pairing": pairing_suite,
    "cauchy": cauchy_suite,
    "fft": fft_suite,
    "jsw": jsw_suite,
    "duality": duality_suite,
    "braiding": braiding_suite,
    "functor": functor_suite,
    "comodule": lambda max_n=None, max_d=None: comodule_suite(),
    "centralizer": lambda max_n=None, max_d=None: centralizer_suite(),
    "schur": schur_suite,
}


def run_suite(name, max_n=None, max_d=None):
    fn = SUITES[name]
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_d is not None:
        kwargs["max_d"] = max_d
    return fn(**kwargs)
