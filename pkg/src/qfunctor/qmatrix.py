"""The quantum matrix algebra A_q(m, n) with its ordered-monomial normal form.

Generators ``x_{ji}`` (1 <= j <= m, 1 <= i <= n) are ordered lexicographically
by (row, col).  A word is a tuple of :class:`QVar`; it is in normal form when
it is weakly increasing.  Each defining relation is oriented so that a
descending adjacent pair rewrites to strictly smaller words, and the
rewriting system is confluent, so the sorted words form a basis.
"""

import itertools
import json
import random
from collections import namedtuple
from functools import lru_cache
from math import comb

from .braidrep import all_perms, index_of, tensor_basis
from .exactalg import ExactMatrix, LaurentPoly, RatFunc, format_laurent, parse_laurent
from .exactalg.laurent import ONE as L_ONE

QVar = namedtuple("QVar", "row col")
QVar.__str__ = lambda v: f"x{v.row}{v.col}" if v.row < 10 and v.col < 10 else f"x[{v.row},{v.col}]"

Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})
_QQ = Q - QINV


def _rewrite_pair(a, b):
    """The value of the descending product a*b (a > b) as [(coeff, word)]."""
    i, k = a
    j, l = b
    if i == j:
        return [(Q, (b, a))]
    if k == l:
        return [(Q, (b, a))]
    if k < l:
        return [(L_ONE, (b, a))]
    return [(L_ONE, (b, a)), (_QQ, (QVar(j, k), QVar(i, l)))]


def _first_descent(word):
    for p in range(len(word) - 1):
        if word[p] > word[p + 1]:
            return p
    return None


@lru_cache(maxsize=None)
def _nf_word(word):
    """Leftmost reduction of a single word; returns a tuple of (word, coeff)."""
    p = _first_descent(word)
    if p is None:
        return ((word, L_ONE),)
    acc = {}
    for c, pair in _rewrite_pair(word[p], word[p + 1]):
        for w, v in _nf_word(word[:p] + pair + word[p + 2 :]):
            acc[w] = acc.get(w, 0) + c * v
    return tuple((w, v) for w, v in acc.items() if v)


def _nf_word_random(word, rng):
    descents = [p for p in range(len(word) - 1) if word[p] > word[p + 1]]
    if not descents:
        return {word: L_ONE}
    p = rng.choice(descents)
    acc = {}
    for c, pair in _rewrite_pair(word[p], word[p + 1]):
        for w, v in _nf_word_random(word[:p] + pair + word[p + 2 :], rng).items():
            acc[w] = acc.get(w, 0) + c * v
    return {w: v for w, v in acc.items() if v}


def _as_word(word):
    return tuple(QVar(*v) for v in word)


class QMatrixElement:
    """An element of A_q(m, n) as a combination of normal-form words."""

    __slots__ = ("shape", "terms")

    def __init__(self, shape, terms=None, reduced=False):
        self.shape = tuple(shape)
        m, n = self.shape
        acc = {}
        for word, c in (terms or {}).items():
            word = _as_word(word)
            for v in word:
                if not (1 <= v.row <= m and 1 <= v.col <= n):
                    raise ValueError(f"{v} is not a generator of A_q({m},{n})")
            c = LaurentPoly.coerce(c)
            if not c:
                continue
            if reduced:
                acc[word] = acc.get(word, 0) + c
            else:
                for w, v in _nf_word(word):
                    acc[w] = acc.get(w, 0) + c * v
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def generator(cls, shape, row, col):
        return cls(shape, {(QVar(row, col),): L_ONE}, reduced=True)

    @classmethod
    def one(cls, shape):
        return cls(shape, {(): L_ONE}, reduced=True)

    @classmethod
    def word(cls, shape, word, coeff=L_ONE):
        return cls(shape, {_as_word(word): coeff})

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return QMatrixElement(self.shape, terms, reduced=True)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return QMatrixElement(self.shape, {w: v * c for w, v in self.terms.items()}, reduced=True)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                terms[w1 + w2] = terms.get(w1 + w2, 0) + c1 * c2
        return QMatrixElement(self.shape, terms)

    def _check(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        return isinstance(other, QMatrixElement) and self.shape == other.shape and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(map(str, w)) or "1"
            if c == L_ONE:
                parts.append(mono)
            elif c == -L_ONE:
                parts.append("-" + mono)
            else:
                parts.append(f"({format_laurent(c)})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        return {
            "shape": list(self.shape),
            "terms": [
                {"word": [[v.row, v.col] for v in w], "coeff": format_laurent(c)}
                for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            terms[tuple(QVar(*v) for v in t["word"])] = parse_laurent(t["coeff"])
        return cls(tuple(data["shape"]), terms)

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def normal_form(word_terms, shape):
    """Normal form of a combination of raw words ``{word: coeff}`` (or one word)."""
    if isinstance(word_terms, (tuple, list)):
        word_terms = {_as_word(word_terms): L_ONE}
    return QMatrixElement(shape, word_terms)


def normal_form_random(word, shape, rng=None):
    """Normal form via randomly chosen reductions (no memoisation)."""
    rng = rng or random.Random()
    return QMatrixElement(shape, _nf_word_random(_as_word(word), rng), reduced=True)


@lru_cache(maxsize=None)
def degree_basis(m, n, d):
    """Sorted words of length d over the generators of A_q(m, n)."""
    gens = [QVar(j, i) for j in range(1, m + 1) for i in range(1, n + 1)]
    return tuple(itertools.combinations_with_replacement(gens, d))


@lru_cache(maxsize=None)
def _basis_index(m, n, d):
    return {w: k for k, w in enumerate(degree_basis(m, n, d))}


def basis_dimension(m, n, d):
    return comb(m * n + d - 1, d)


def monomial_of(J, I):
    """The raw word x_{j1 i1} ... x_{jd id}."""
    return tuple(QVar(j, i) for j, i in zip(J, I))


def indices_of(word):
    return tuple(v.row for v in word), tuple(v.col for v in word)


# -- coproduct and counit ---------------------------------------------------------


class QTensor:
    """A combination of pure tensors of normal-form words, one leg per shape."""

    __slots__ = ("shapes", "terms")

    def __init__(self, shapes, terms):
        self.shapes = tuple(tuple(s) for s in shapes)
        self.terms = {k: v for k, v in terms.items() if v}

    def __eq__(self, other):
        return isinstance(other, QTensor) and self.shapes == other.shapes and self.terms == other.terms

    def __mul__(self, other):
        if self.shapes != other.shapes:
            raise ValueError("tensor shapes differ")
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                for legs, c in _product_legs(self.shapes, k1, k2):
                    acc[legs] = acc.get(legs, 0) + c1 * c2 * c
        return QTensor(self.shapes, acc)

    def __repr__(self):
        return f"QTensor({self.shapes}, {len(self.terms)} terms)"


def _product_legs(shapes, k1, k2):
    parts = [list(_nf_word(a + b)) for a, b in zip(k1, k2)]
    for combo in itertools.product(*parts):
        c = L_ONE
        for _, v in combo:
            c = c * v
        yield tuple(w for w, _ in combo), c


def _split_word(word, middle):
    """Δ of a single raw word: [(left_raw, right_raw)] with unit coefficients."""
    out = []
    for ks in itertools.product(range(1, middle + 1), repeat=len(word)):
        left = tuple(QVar(v.row, k) for v, k in zip(word, ks))
        right = tuple(QVar(k, v.col) for v, k in zip(word, ks))
        out.append((left, right))
    return out


def coproduct(e, middle):
    """Δ: A_q(a, b) -> A_q(a, middle) ⊗ A_q(middle, b), legs in normal form."""
    return coproduct_leg(as_tensor(e), 0, middle)


def coproduct_leg(t, leg, middle):
    """Apply Δ to one tensor leg of a QTensor."""
    a, b = t.shapes[leg]
    shapes = t.shapes[:leg] + ((a, middle), (middle, b)) + t.shapes[leg + 1 :]
    acc = {}
    for key, c in t.terms.items():
        for left, right in _split_word(key[leg], middle):
            for wl, cl in _nf_word(left):
                for wr, cr in _nf_word(right):
                    k = key[:leg] + (wl, wr) + key[leg + 1 :]
                    acc[k] = acc.get(k, 0) + c * cl * cr
    return QTensor(shapes, acc)


def counit(e):
    """ε(x_{ij}) = δ_ij, extended multiplicatively."""
    m, n = e.shape
    if m != n:
        raise ValueError("the counit is defined on A_q(n, n) only")
    acc = LaurentPoly()
    for w, c in e.terms.items():
        if all(v.row == v.col for v in w):
            acc = acc + c
    return acc


def counit_leg(t, leg):
    """Apply ε to one leg of a QTensor, dropping that leg."""
    a, b = t.shapes[leg]
    if a != b:
        raise ValueError("the counit is defined on square legs only")
    acc = {}
    for key, c in t.terms.items():
        if all(v.row == v.col for v in key[leg]):
            k = key[:leg] + key[leg + 1 :]
            acc[k] = acc.get(k, 0) + c
    return QTensor(t.shapes[:leg] + t.shapes[leg + 1 :], acc)


def as_tensor(e):
    return QTensor([e.shape], {(w,): c for w, c in e.terms.items()})


def quantum_determinant(n):
    """Σ_σ (-q^-1)^{ℓ(σ)} x_{1σ(1)} ... x_{nσ(n)}."""
    terms = {}
    for s in all_perms(n):
        terms[monomial_of(range(1, n + 1), s.images)] = (-QINV) ** s.length()
    return QMatrixElement((n, n), terms)


# -- functionals and the pairing with intertwiners -----------------------------------


class QFunctional:
    """A linear functional on A_q(n, m)_d, stored against degree_basis(n, m, d).

    Under the trace pairing it corresponds to an intertwiner V_m^{⊗d} -> V_n^{⊗d}.
    """

    __slots__ = ("n", "m", "d", "values")

    def __init__(self, n, m, d, values):
        values = tuple(RatFunc.coerce(v) for v in values)
        if len(values) != len(degree_basis(n, m, d)):
            raise ValueError("functional has the wrong length")
        self.n, self.m, self.d, self.values = n, m, d, values

    def __call__(self, e):
        if e.shape != (self.n, self.m):
            raise ValueError("element lives in a different algebra")
        idx = _basis_index(self.n, self.m, self.d)
        acc = RatFunc.coerce(0)
        for w, c in e.terms.items():
            if len(w) != self.d:
                if c:
                    raise ValueError("element has the wrong degree")
                continue
            v = self.values[idx[w]]
            if v:
                acc = acc + v * RatFunc.coerce(c)
        return acc

    def __add__(self, other):
        return QFunctional(self.n, self.m, self.d, [a + b for a, b in zip(self.values, other.values)])

    def scale(self, c):
        c = RatFunc.coerce(c)
        return QFunctional(self.n, self.m, self.d, [c * a for a in self.values])

    def __eq__(self, other):
        return (
            isinstance(other, QFunctional)
            and (self.n, self.m, self.d) == (other.n, other.m, other.d)
            and self.values == other.values
        )

    def __repr__(self):
        return f"QFunctional(n={self.n}, m={self.m}, d={self.d})"


def phi_functional(subset, m, n, d):
    """φ^d on A_q(n, m)_d: x_{kl} -> 1 if k = l lies in subset, else 0."""
    subset = set(subset)
    vals = []
    for w in degree_basis(n, m, d):
        ok = all(v.row == v.col and v.row in subset for v in w)
        vals.append(1 if ok else 0)
    return QFunctional(n, m, d, vals)


def counit_functional(n, d):
    return phi_functional(range(1, n + 1), n, n, d)


def inclusion_exclusion_terms(m, d):
    """Integer weights c_I with φ_{1..m} = Σ_{|I| <= d} c_I φ_I on degree d (d < m)."""
    if d >= m:
        return {tuple(range(1, m + 1)): 1}
    out = {}
    for k in range(d + 1):
        c = (-1) ** (d - k) * comb(m - k - 1, d - k)
        if c:
            for I in itertools.combinations(range(1, m + 1), k):
                out[I] = c
    return out


@lru_cache(maxsize=None)
def _nf_table(n, m, d):
    idx = _basis_index(n, m, d)
    table = {}
    for J in tensor_basis(n, d):
        for I in tensor_basis(m, d):
            table[(J, I)] = tuple((idx[w], c) for w, c in _nf_word(monomial_of(J, I)))
    return table


def functional_to_intertwiner(f):
    """X with X[J, I] = f(x_{JI}); a map V_m^{⊗d} -> V_n^{⊗d}."""
    n, m, d = f.n, f.m, f.d
    Js, Is = tensor_basis(n, d), tensor_basis(m, d)
    table = _nf_table(n, m, d)
    rows = []
    for J in Js:
        row = []
        for I in Is:
            acc = RatFunc.coerce(0)
            for k, c in table[(J, I)]:
                v = f.values[k]
                if v:
                    acc = acc + v * RatFunc.coerce(c)
            row.append(acc)
        rows.append(row)
    return ExactMatrix(rows)


def intertwiner_to_functional(X, n, m, d):
    """f with f(w) = X[J, I] for each normal-form word w = x_{JI}."""
    if X.shape != (n**d, m**d):
        raise ValueError("intertwiner has the wrong shape")
    vals = []
    for w in degree_basis(n, m, d):
        J, I = indices_of(w)
        vals.append(X[index_of(J, n), index_of(I, m)])
    return QFunctional(n, m, d, vals)


def pairing(X, mono, n=None, m=None):
    """<X, mono>: the entry X[J, I] for the word x_{JI}, extended linearly.

    ``mono`` may be a word (tuple of QVar or pairs) or a QMatrixElement in
    A_q(n, m)_d; raw words are paired directly, elements through their terms.
    """
    if isinstance(mono, QMatrixElement):
        n, m = mono.shape
        acc = RatFunc.coerce(0)
        for w, c in mono.terms.items():
            acc = acc + RatFunc.coerce(c) * pairing(X, w, n, m)
        return acc
    word = _as_word(mono)
    d = len(word)
    J, I = indices_of(word)
    if n is None:
        n = _root(X.rows, d)
        m = _root(X.cols, d)
    if X.shape != (n**d, m**d):
        raise ValueError("degree or shape mismatch between X and the monomial")
    if max(J) > n or max(I) > m:
        raise ValueError("monomial indices exceed the intertwiner dimensions")
    return X[index_of(J, n), index_of(I, m)]


def _root(size, d):
    for k in range(1, size + 1):
        if k**d == size:
            return k
    raise ValueError(f"{size} is not a {d}-th power")
