"""Yang-Baxter spaces, their tensor powers, and an exact eigenvalue search."""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .braidrep import TensorAction, block_swap, reduced_word, standard_R, tensor_basis
from .exactalg import ExactMatrix, LaurentPoly, RatFunc
from .exactalg import elim


@dataclass(frozen=True)
class YBSpace:
    dim: int
    R: ExactMatrix
    label: str = ""
    degree: int = 1  # tensor degree over the base space; R acts on degree 2*degree

    def __post_init__(self):
        if self.R.shape != (self.dim * self.dim, self.dim * self.dim):
            raise ValueError("R must be a dim^2 x dim^2 matrix")

    @classmethod
    def standard(cls, n):
        return cls(n, standard_R(n), f"V_{n}")

    def action(self):
        return TensorAction(self.dim, self.R)


def is_yang_baxter(S):
    """True iff R12 R23 R12 = R23 R12 R23 on V^{⊗3}, checked on each basis vector."""
    action = S.action()
    for K in tensor_basis(S.dim, 3):
        if action.apply_word(K, (1, 2, 1)) != action.apply_word(K, (2, 1, 2)):
            return False
    return True


def satisfies_hecke(S):
    """(R - q)(R + q^-1) = 0."""
    N = S.R.rows
    ident = ExactMatrix.identity(N)
    q = RatFunc.coerce(LaurentPoly({1: 1}))
    return ((S.R - ident.scale(q)) @ (S.R + ident.scale(q.inverse()))).is_zero()


def tensor_power_space(S, d):
    """(V^{⊗d}, T_{w_d}), with T_{w_d} built from S.R along a reduced word of w_d."""
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return S
    word = reduced_word(block_swap(d, d))
    R = S.action().matrix(2 * d, word)
    label = f"({S.label})^⊗{d}" if S.label else ""
    return YBSpace(S.dim**d, R, label, S.degree * d)


# -- spectrum -------------------------------------------------------------------


@dataclass(frozen=True)
class Eigen:
    sign: int
    exponent: int
    multiplicity: int

    def value(self):
        return LaurentPoly({self.exponent: self.sign})

    def label(self):
        return str(self.value())


@dataclass
class SpectrumReport:
    entries: list = field(default_factory=list)
    dim: int = 0
    complete: bool = False

    def as_dict(self):
        return {e.label(): e.multiplicity for e in self.entries}

    def total(self):
        return sum(e.multiplicity for e in self.entries)


def default_max_exp(S):
    """2 * (tensor degree of the carrier of R)^2."""
    return 2 * (2 * S.degree) ** 2


def thread_cap():
    env = os.environ.get("QFUNCTOR_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _distinct_blocks(M):
    """Diagonal blocks of M by connectivity, deduplicated; returns [(rows, count)]."""
    rows = M.sparse_rows()
    # symmetrise the pattern so that row/column blocks coincide
    pattern = [dict(r) for r in rows]
    for i, r in enumerate(rows):
        for j in r:
            pattern[j][i] = True
    seen = {}
    for _, cols in elim.components(pattern, M.cols):
        index = {c: k for k, c in enumerate(cols)}
        block = tuple(
            tuple(sorted((index[j], v) for j, v in rows[c].items())) for c in cols
        )
        seen[block] = seen.get(block, 0) + 1
    return list(seen.items())


def _block_nullities(block, candidates, seed):
    """Geometric multiplicity of each candidate eigenvalue on one block."""
    size = len(block)
    q0 = elim.random_point(seed)
    out = {}
    for sign, k in candidates:
        lam = RatFunc.coerce(LaurentPoly({k: sign}))
        rows = []
        for i, entries in enumerate(block):
            row = {j: v for j, v in entries}
            t = row.get(i, RatFunc.coerce(0)) - lam
            if t:
                row[i] = t
            else:
                row.pop(i, None)
            rows.append(row)
        if elim.rank_mod_p(rows, size, q0) == size:
            continue
        nul = size - elim.rank(rows, size)
        if nul:
            out[(sign, k)] = nul
    return out


def _block_job(args):
    return _block_nullities(*args)


def spectrum(S, max_exp=None, workers=None, seed=0):
    """Eigenvalues ±q^k (|k| <= max_exp) of S.R with geometric multiplicities."""
    if max_exp is None:
        max_exp = default_max_exp(S)
    if max_exp < 0:
        raise ValueError("max_exp must be nonnegative")
    M = S.R
    candidates = [(s, k) for s in (1, -1) for k in range(-max_exp, max_exp + 1)]
    blocks = _distinct_blocks(M)
    jobs = [(b, candidates, seed) for b, _ in blocks]
    workers = min(workers or thread_cap(), len(jobs))
    if workers > 1 and M.rows >= 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_block_job, jobs))
    else:
        results = [_block_job(j) for j in jobs]
    totals = {}
    for (_, count), res in zip(blocks, results):
        for key, nul in res.items():
            totals[key] = totals.get(key, 0) + nul * count
    entries = [Eigen(s, k, m) for (s, k), m in sorted(totals.items(), key=lambda t: (t[0][1], t[0][0]))]
    total = sum(e.multiplicity for e in entries)
    return SpectrumReport(entries, M.rows, total == M.rows)


def table_spectrum(n, d, square=True, max_exp=None, workers=None):
    """Spectrum of the operator of (V_n^{⊗d})^{⊗2} when square, else of V_n^{⊗d} itself.

    Without ``square`` the carrier V_n^{⊗d} is read as (V_n^{⊗d/2})^{⊗2}, so d
    must be even; d = 2 gives R_n.
    """
    base = YBSpace.standard(n)
    if square:
        S = tensor_power_space(base, d)
    else:
        if d % 2:
            raise ValueError("without square the degree must be even")
        S = tensor_power_space(base, d // 2)
    return spectrum(S, max_exp, workers)
