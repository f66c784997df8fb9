"""Dense exact matrices over Q(q)."""

from fractions import Fraction

from . import elim
from .laurent import LaurentPoly
from .ratfunc import RatFunc, ZERO, ONE


def _coerce(x):
    return x if isinstance(x, RatFunc) else RatFunc.coerce(x)


class ExactMatrix:
    """An immutable rows x cols matrix of :class:`RatFunc` entries."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries, rows=None, cols=None):
        entries = tuple(tuple(_coerce(x) for x in row) for row in entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("ragged or mis-sized matrix data")
        self.rows, self.cols, self.entries = rows, cols, entries
        self._hash = None

    @classmethod
    def _wrap(cls, entries, rows, cols):
        obj = cls.__new__(cls)
        obj.rows, obj.cols, obj.entries, obj._hash = rows, cols, entries, None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols):
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n):
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def diagonal(cls, values):
        values = [_coerce(v) for v in values]
        n = len(values)
        return cls._wrap(
            tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def from_sparse_rows(cls, rows, ncols):
        data = []
        for row in rows:
            r = [ZERO] * ncols
            for j, v in row.items():
                r[j] = _coerce(v)
            data.append(tuple(r))
        return cls._wrap(tuple(data), len(data), ncols)

    @classmethod
    def from_columns(cls, columns, nrows):
        """Build from a list of column vectors given as sparse dicts or sequences."""
        grid = [[ZERO] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if v:
                    grid[i][j] = _coerce(v)
        return cls._wrap(tuple(tuple(r) for r in grid), nrows, len(columns))

    # -- access -------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def sparse_rows(self):
        return [{j: x for j, x in enumerate(r) if x} for r in self.entries]

    def is_zero(self):
        return not any(x for r in self.entries for x in r)

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def __str__(self):
        cells = [[str(x) if x else "." for x in r] for r in self.entries]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return ExactMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.rows,
            self.cols,
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return ExactMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.rows,
            self.cols,
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = _coerce(c)
        return ExactMatrix._wrap(
            tuple(tuple(c * x if x else ZERO for x in r) for r in self.entries), self.rows, self.cols
        )

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            brows = [[(j, x) for j, x in enumerate(r) if x] for r in other.entries]
            out = []
            for r in self.entries:
                acc = {}
                for k, a in enumerate(r):
                    if a:
                        for j, b in brows[k]:
                            t = acc.get(j)
                            acc[j] = a * b if t is None else t + a * b
                row = [ZERO] * other.cols
                for j, v in acc.items():
                    row[j] = v
                out.append(tuple(row))
            return ExactMatrix._wrap(tuple(out), self.rows, other.cols)
        # vector
        vec = [_coerce(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        res = []
        for r in self.entries:
            acc = ZERO
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            res.append(acc)
        return tuple(res)

    def transpose(self):
        if not self.rows:
            return ExactMatrix._wrap(tuple(() for _ in range(self.cols)), self.cols, 0)
        return ExactMatrix._wrap(tuple(zip(*self.entries)), self.cols, self.rows)

    T = property(transpose)

    def kron(self, other):
        rows = []
        for ra in self.entries:
            for rb in other.entries:
                rows.append(tuple(a * b if a and b else ZERO for a in ra for b in rb))
        return ExactMatrix._wrap(tuple(rows), self.rows * other.rows, self.cols * other.cols)

    def submatrix(self, rows, cols):
        return ExactMatrix._wrap(
            tuple(tuple(self.entries[i][j] for j in cols) for i in rows), len(rows), len(cols)
        )

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return ExactMatrix._wrap(
            tuple(a + b for a, b in zip(self.entries, other.entries)), self.rows, self.cols + other.cols
        )

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return ExactMatrix._wrap(self.entries + other.entries, self.rows + other.rows, self.cols)

    def flatten(self):
        """Row-major list of entries."""
        return [x for r in self.entries for x in r]

    def trace(self):
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    # -- linear algebra -----------------------------------------------------

    def rank(self):
        return elim.rank(self.sparse_rows(), self.cols)

    def rref(self):
        return rref(self)

    def kernel(self):
        return kernel(self)

    def column_space(self):
        return column_space(self)

    def inverse(self):
        if not self.is_square():
            raise ValueError("only square matrices are invertible")
        n = self.rows
        aug = self.hstack(ExactMatrix.identity(n))
        R, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return R.submatrix(range(n), range(n, 2 * n))

    def evaluate_at(self, q0):
        """Entrywise specialisation to a matrix of Fractions."""
        return [[x.evaluate_at(q0) for x in r] for r in self.entries]


def rref(M):
    """Reduced row echelon form of M and its pivot columns (increasing)."""
    rows, piv = elim.rref(M.sparse_rows(), M.cols)
    R = ExactMatrix.from_sparse_rows(rows, M.cols)
    if R.rows < M.rows:
        R = R.vstack(ExactMatrix.zeros(M.rows - R.rows, M.cols))
    return R, piv


def kernel(M):
    """Basis of {v : M v = 0} as tuples, in canonical reduced form."""
    return [_dense(v, M.cols) for _, v in elim.kernel(M.sparse_rows(), M.cols)]


def kernel_sparse(rows, ncols):
    """Kernel of a system given as sparse rows; returns (free_columns, vectors)."""
    ker = elim.kernel([{j: _coerce(x) for j, x in r.items()} for r in rows], ncols)
    return [f for f, _ in ker], [_dense(v, ncols) for _, v in ker]


def column_space(M):
    """The pivot columns of M: a basis of its column span."""
    _, piv = elim.rref(M.sparse_rows(), M.cols)
    return [M.column(j) for j in piv]


def pivot_columns(M):
    return elim.rref(M.sparse_rows(), M.cols)[1]


def rank_sparse(rows, ncols):
    return elim.rank(rows, ncols)


def _dense(v, n):
    out = [ZERO] * n
    for j, x in v.items():
        out[j] = x
    return tuple(out)


def char_poly(M):
    """Coefficients (constant term first) of det(t I - M), via Faddeev-LeVerrier."""
    if not M.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = M.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = ExactMatrix.zeros(n, n)
    ident = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = (M @ Mk).trace() * RatFunc(Fraction(-1, k))
    return tuple(coeffs)


def poly_eval(coeffs, x):
    """Evaluate a polynomial in t (RatFunc coefficients, constant first) at x."""
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_eval_matrix(coeffs, M):
    n = M.rows
    acc = ExactMatrix.zeros(n, n)
    ident = ExactMatrix.identity(n)
    for c in reversed(coeffs):
        acc = acc @ M + ident.scale(c)
    return acc


def evaluate_at(x, q0):
    """Specialise a LaurentPoly, RatFunc or ExactMatrix at the rational q0."""
    if isinstance(x, (LaurentPoly, RatFunc, ExactMatrix)):
        return x.evaluate_at(q0)
    raise TypeError(f"cannot specialise {type(x).__name__}")


def fraction_rank(rows):
    """Rank of a matrix of Fractions (plain Gaussian elimination)."""
    grid = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    ncols = len(grid[0]) if grid else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(grid)) if grid[i][c]), None)
        if piv is None:
            continue
        grid[rk], grid[piv] = grid[piv], grid[rk]
        p = grid[rk][c]
        for i in range(len(grid)):
            if i != rk and grid[i][c]:
                f = grid[i][c] / p
                grid[i] = [a - f * b for a, b in zip(grid[i], grid[rk])]
        rk += 1
    return rk
