"""Sparse exact elimination over Q(q).

Rows are dicts ``{column: RatFunc}``.  Each row is first rescaled by a unit of
Q(q) so that its entries lie in Z[q]; elimination then runs fraction-free
(Bareiss-style Gauss-Jordan), where every division is exact.  Rational
functions only reappear when the reduced form or a kernel basis is
normalised at the very end.

The column/row incidence graph is split into connected components first.
Operators on tensor space are block diagonal by weight, so this turns one
large system into many small ones without the caller knowing about weights.
"""

import random

from . import zpoly
from .laurent import LaurentPoly
from .ratfunc import RatFunc, ZERO

_ONE_T = (1,)


def to_zrows(rows):
    """Rescale each sparse RatFunc row so that all its entries are in Z[q]."""
    out = []
    for row in rows:
        if not row:
            continue
        lcm = _ONE_T
        low = None
        for v in row.values():
            d = v.den.coeffs
            if d != _ONE_T and d != lcm:
                g = zpoly.gcd(lcm, d)
                lcm = zpoly.divexact(zpoly.mul(lcm, d), g)
            if low is None or v.num.low < low:
                low = v.num.low
        zr = {}
        for j, v in row.items():
            c = zpoly.shift(v.num.coeffs, v.num.low - low)
            d = v.den.coeffs
            if lcm != _ONE_T:
                c = zpoly.mul(c, lcm if d == _ONE_T else zpoly.divexact(lcm, d))
            zr[j] = c
        out.append(zr)
    return out


def components(rows, ncols):
    """Group row indices and columns into connected components.

    Returns a list of ``(row_indices, sorted_columns)``; columns that appear
    in no row are returned as singleton components with no rows.
    """
    parent = list(range(ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows:
        it = iter(row)
        first = next(it, None)
        if first is None:
            continue
        r0 = find(first)
        for j in it:
            rj = find(j)
            if rj != r0:
                parent[rj] = r0
    groups = {}
    for j in range(ncols):
        groups.setdefault(find(j), ([], []))[1].append(j)
    for i, row in enumerate(rows):
        if row:
            groups[find(next(iter(row)))][0].append(i)
    return sorted(groups.values(), key=lambda g: g[1][0])


def ff_gauss_jordan(rows, cols):
    """Fraction-free Gauss-Jordan on Z[q] rows restricted to ``cols``.

    Returns ``(pivot_rows, pivots, den)``: the reduced form is
    ``pivot_rows / den`` and every pivot entry equals ``den``.
    """
    rows = [dict(r) for r in rows if r]
    m = len(rows)
    prev = _ONE_T
    pivots = []
    r = 0
    divexact, mul, sub = zpoly.divexact, zpoly.mul, zpoly.sub
    for c in cols:
        if r == m:
            break
        best = None
        for i in range(r, m):
            v = rows[i].get(c)
            if v:
                key = zpoly.size_key(v)
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        p = prow[c]
        unit = prev == _ONE_T
        for k in range(m):
            if k == r:
                continue
            row = rows[k]
            a = row.get(c)
            if a is None:
                if p == prev:
                    continue
                rows[k] = {j: divexact(mul(p, v), prev) for j, v in row.items()}
                continue
            new = {}
            for j, v in row.items():
                if j == c:
                    continue
                t = mul(p, v)
                pv = prow.get(j)
                if pv is not None:
                    t = sub(t, mul(a, pv))
                if t:
                    new[j] = t if unit else divexact(t, prev)
            for j, pv in prow.items():
                if j != c and j not in row:
                    t = zpoly.neg(mul(a, pv))
                    new[j] = t if unit else divexact(t, prev)
            rows[k] = new
        pivots.append(c)
        prev = p
        r += 1
    return rows[:r], pivots, prev


def _ratfunc(poly, den):
    if not poly:
        return ZERO
    return RatFunc(LaurentPoly.from_dense(0, poly), LaurentPoly.from_dense(0, den))


def _solve_components(rows, ncols):
    zrows = to_zrows(rows)
    for row_ids, cols in components(zrows, ncols):
        if not row_ids:
            yield cols, [], [], _ONE_T
            continue
        prow, piv, den = ff_gauss_jordan([zrows[i] for i in row_ids], cols)
        yield cols, prow, piv, den


def rank(rows, ncols):
    return sum(len(piv) for _, _, piv, _ in _solve_components(rows, ncols))


def rref(rows, ncols):
    """Reduced row echelon form: (list of sparse RatFunc rows, pivot columns)."""
    result = []
    for _, prow, piv, den in _solve_components(rows, ncols):
        for row, c in zip(prow, piv):
            result.append((c, {j: _ratfunc(v, den) for j, v in row.items()}))
    result.sort(key=lambda t: t[0])
    return [r for _, r in result], [c for c, _ in result]


def kernel(rows, ncols):
    """Canonical kernel basis as sparse dicts, one per free column.

    The vector for free column f has entry 1 at f and zero at every other
    free column, so coordinates of a kernel element are read off at the
    free columns.  Vectors are ordered by free column.
    """
    out = []
    for cols, prow, piv, den in _solve_components(rows, ncols):
        pivset = set(piv)
        for f in cols:
            if f in pivset:
                continue
            v = {f: RatFunc.coerce(1)}
            for row, c in zip(prow, piv):
                x = row.get(f)
                if x:
                    v[c] = _ratfunc(zpoly.neg(x), den)
            out.append((f, v))
    out.sort(key=lambda t: t[0])
    return out


# -- modular specialisation ------------------------------------------------

PRIME = (1 << 61) - 1


def random_point(seed=0):
    return random.Random(seed).randrange(2, PRIME - 1)


def rank_mod_p(rows, ncols, q0, p=PRIME):
    """Rank after specialising q -> q0 in F_p.

    This never exceeds the rank over Q(q), so a full specialised rank
    certifies full generic rank.
    """
    mrows = []
    for row in rows:
        mr = {}
        for j, v in row.items():
            x = v.evaluate_mod(q0, p)
            if x:
                mr[j] = x
        if mr:
            mrows.append(mr)
    rk = 0
    pivot_rows = {}
    for row in mrows:
        row = dict(row)
        while row:
            c = min(row)
            pr = pivot_rows.get(c)
            if pr is None:
                inv = pow(row[c], -1, p)
                pivot_rows[c] = {j: v * inv % p for j, v in row.items()}
                rk += 1
                break
            f = row[c]
            for j, v in pr.items():
                t = (row.get(j, 0) - f * v) % p
                if t:
                    row[j] = t
                else:
                    row.pop(j, None)
    return rk


class ModularEliminator:
    """Incremental row echelon form over F_p after specialising q -> q0.

    ``add`` reports whether a row is independent of those already seen; rows
    independent after specialisation are independent over Q(q) as well.
    """

    def __init__(self, q0, p=PRIME):
        self.q0, self.p = q0, p
        self.pivot_rows = {}

    @property
    def rank(self):
        return len(self.pivot_rows)

    def add(self, row):
        p = self.p
        cur = {}
        for j, v in row.items():
            x = v.evaluate_mod(self.q0, p)
            if x:
                cur[j] = x
        while cur:
            c = min(cur)
            pr = self.pivot_rows.get(c)
            if pr is None:
                inv = pow(cur[c], -1, p)
                self.pivot_rows[c] = {j: v * inv % p for j, v in cur.items()}
                return True
            f = cur[c]
            for j, v in pr.items():
                t = (cur.get(j, 0) - f * v) % p
                if t:
                    cur[j] = t
                else:
                    cur.pop(j, None)
        return False
