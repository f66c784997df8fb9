"""Permutations, reduced words, the standard R-matrix and the Hecke action on V_n^{⊗d}.

Conventions
-----------
* Permutations are in one-line notation on {1..d}; ``(w * v)(k) = w(v(k))``.
* Tensor indices are tuples ``I = (i_1, ..., i_d)`` with ``1 <= i_k <= n``;
  the basis of V_n^{⊗d} is ordered lexicographically.
* The Hecke algebra acts on the right: ``e_I . T_w`` applies the generators of
  a reduced word of ``w`` left to right.  The matrix ``rho(d, n, w)`` sends
  the coordinate column of ``e_I`` to that of ``e_I . T_w``, so
  ``rho(T_w T_v) = rho(T_v) @ rho(T_w)``.
* At q = 1 the action is ``e_I . w = e_{I.w}`` with ``(I.w)_k = i_{w(k)}``.
"""

import itertools
import random
from functools import lru_cache

from .exactalg import ExactMatrix, LaurentPoly, RatFunc
from .exactalg.laurent import ONE as L_ONE

Q = LaurentPoly({1: 1})
QINV = LaurentPoly({-1: 1})
Q_MINUS_QINV = Q - QINV

_RQ = RatFunc.coerce(Q)
_RONE = RatFunc.coerce(1)
_RQQ = RatFunc.coerce(Q_MINUS_QINV)


class Perm:
    """A permutation of {1..d} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, d):
        return cls(range(1, d + 1))

    @classmethod
    def simple(cls, i, d):
        if not 1 <= i < d:
            raise ValueError(f"s_{i} is not a generator of S_{d}")
        im = list(range(1, d + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(im)

    @classmethod
    def from_word(cls, word, d):
        w = cls.identity(d)
        for i in word:
            w = w * cls.simple(i, d)
        return w

    @classmethod
    def parse(cls, text):
        """From a one-line string such as ``"14253"`` (d <= 9) or ``"1,4,2"``."""
        if "," in text:
            return cls(int(x) for x in text.split(","))
        return cls(int(c) for c in text)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("permutations of different degree")
        return Perm(self.images[v - 1] for v in other.images)

    def inverse(self):
        inv = [0] * self.degree
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Perm(inv)

    def length(self):
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def right_descents(self):
        im = self.images
        return [i for i in range(1, len(im)) if im[i - 1] > im[i]]

    def act(self, index):
        """Right action on a tuple: ``(I.w)_k = I[w(k)]``."""
        return tuple(index[v - 1] for v in self.images)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({''.join(map(str, self.images)) if self.degree < 10 else self.images})"


def reduced_word(w):
    """Reduced word of ``w`` found by bubble-sorting its one-line notation.

    Each adjacent swap removes one inversion, so the word has length
    ``w.length()``.
    """
    im = list(w.images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(im) - 1):
            if im[i] > im[i + 1]:
                im[i], im[i + 1] = im[i + 1], im[i]
                swaps.append(i + 1)
                changed = True
    # im . s_{j1} ... s_{jk} = id, so w = s_{jk} ... s_{j1}
    return swaps[::-1]


def random_reduced_word(w, rng=None):
    """A reduced word obtained by stripping random right descents."""
    rng = rng or random.Random()
    word = []
    cur = w
    while True:
        desc = cur.right_descents()
        if not desc:
            break
        i = rng.choice(desc)
        word.append(i)
        cur = cur * Perm.simple(i, w.degree)
    return word[::-1]


def all_perms(d):
    return [Perm(p) for p in itertools.permutations(range(1, d + 1))]


def longest_element(d):
    return Perm(range(d, 0, -1))


def block_swap(d, e):
    """The permutation whose q = 1 action sends e_I ⊗ e_J to e_J ⊗ e_I (|I| = d, |J| = e)."""
    return Perm([k + d for k in range(1, e + 1)] + [k for k in range(1, d + 1)])


# -- multi-indices -------------------------------------------------------------


def tensor_basis(n, d):
    """All multi-indices of length d over 1..n, in lexicographic order."""
    return list(itertools.product(range(1, n + 1), repeat=d))


def index_of(I, n):
    k = 0
    for i in I:
        k = k * n + (i - 1)
    return k


def content(I, n):
    c = [0] * n
    for i in I:
        c[i - 1] += 1
    return tuple(c)


def is_strict(I):
    return len(set(I)) == len(I)


# -- the standard R-matrix ------------------------------------------------------


def standard_r_action(a, b):
    """R_n(e_a ⊗ e_b) as a list of ((a', b'), coefficient)."""
    if a < b:
        return [((b, a), _RONE)]
    if a == b:
        return [((a, a), _RQ)]
    return [((a, b), _RQQ), ((b, a), _RONE)]


@lru_cache(maxsize=None)
def standard_R(n):
    """Matrix of R_n on V_n ⊗ V_n in the lexicographic basis e_i ⊗ e_j."""
    cols = []
    for a, b in tensor_basis(n, 2):
        cols.append({index_of(J, n): c for J, c in standard_r_action(a, b)})
    return ExactMatrix.from_columns(cols, n * n)


class TensorAction:
    """Right action of braid words on V^{⊗D} induced by an operator R on V ⊗ V."""

    def __init__(self, dim, R=None):
        self.dim = dim
        if R is None:
            self._local = {
                (a, b): standard_r_action(a, b) for a in range(1, dim + 1) for b in range(1, dim + 1)
            }
        else:
            if R.shape != (dim * dim, dim * dim):
                raise ValueError("R must act on V ⊗ V")
            pairs = tensor_basis(dim, 2)
            self._local = {
                pairs[c]: [(pairs[r], R[r, c]) for r in range(dim * dim) if R[r, c]]
                for c in range(dim * dim)
            }

    def apply_generator(self, vec, i):
        """vec . T_i for a sparse vector {multi-index: RatFunc}; i is 1-based."""
        out = {}
        for I, c in vec.items():
            for (a, b), r in self._local[(I[i - 1], I[i])]:
                J = I[: i - 1] + (a, b) + I[i + 1 :]
                t = out.get(J)
                out[J] = c * r if t is None else t + c * r
        return {J: v for J, v in out.items() if v}

    def apply_word(self, I, word):
        vec = {tuple(I): _RONE}
        for i in word:
            vec = self.apply_generator(vec, i)
        return vec

    def matrix(self, D, word):
        for i in word:
            if not 1 <= i < D:
                raise ValueError(f"generator T_{i} out of range for degree {D}")
        basis = tensor_basis(self.dim, D)
        cols = []
        for I in basis:
            cols.append({index_of(J, self.dim): c for J, c in self.apply_word(I, word).items()})
        return ExactMatrix.from_columns(cols, len(basis))


@lru_cache(maxsize=None)
def _standard_action(n):
    return TensorAction(n)


@lru_cache(maxsize=None)
def _rho_word(d, n, word):
    return _standard_action(n).matrix(d, word)


def rho(d, n, w):
    """Matrix of T_w (a Perm, a generator index, or a word as a list) on V_n^{⊗d}."""
    if isinstance(w, Perm):
        if w.degree != d:
            raise ValueError("permutation degree does not match d")
        word = tuple(reduced_word(w))
    elif isinstance(w, int):
        if not 1 <= w <= d - 1:
            raise ValueError(f"generator index {w} out of range 1..{d - 1}")
        word = (w,)
    else:
        word = tuple(w)
    return _rho_word(d, n, word)


def act(I, h, n):
    """e_I . h for a HeckeElement h, as a sparse vector {multi-index: RatFunc}."""
    action = _standard_action(n)
    out = {}
    for w, c in h.terms.items():
        c = RatFunc.coerce(c)
        for J, v in action.apply_word(tuple(I), reduced_word(w)).items():
            t = out.get(J)
            out[J] = c * v if t is None else t + c * v
    return {J: v for J, v in out.items() if v}


def rho_generators(d, n):
    return [rho(d, n, i) for i in range(1, d)]


# -- Hecke algebra elements ------------------------------------------------------


class HeckeElement:
    """A linear combination of T_w, w in S_d, with Laurent coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {w: LaurentPoly.coerce(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w):
        return cls(w.degree, {w: L_ONE})

    @classmethod
    def one(cls, d):
        return cls.basis(Perm.identity(d))

    @classmethod
    def generator(cls, i, d):
        return cls.basis(Perm.simple(i, d))

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return HeckeElement(self.degree, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return HeckeElement(self.degree, {w: v * c for w, v in self.terms.items()})

    def _times_generator(self, i):
        s = Perm.simple(i, self.degree)
        out = {}
        for w, c in self.terms.items():
            ws = w * s
            if ws.length() > w.length():
                out[ws] = out.get(ws, 0) + c
            else:
                out[ws] = out.get(ws, 0) + c
                out[w] = out.get(w, 0) + c * Q_MINUS_QINV
        return HeckeElement(self.degree, out)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if other.degree != self.degree:
            raise ValueError("Hecke elements of different degree")
        total = HeckeElement(self.degree)
        for v, c in other.terms.items():
            part = self
            for i in reduced_word(v):
                part = part._times_generator(i)
            total = total + part.scale(c)
        return total

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.degree == other.degree and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def rho(self, n):
        N = n ** self.degree
        acc = ExactMatrix.zeros(N, N)
        for w, c in sorted(self.terms.items()):
            acc = acc + rho(self.degree, n, w).scale(RatFunc.coerce(c))
        return acc

    def __repr__(self):
        return f"HeckeElement({self.degree}, {len(self.terms)} terms)"


def symmetrizer(d):
    """x_d: the sum of q^{l(w)} T_w over S_d."""
    return HeckeElement(d, {w: Q ** w.length() for w in all_perms(d)})


def antisymmetrizer(d):
    """y_d: the sum of (-q^{-1})^{l(w)} T_w over S_d."""
    return HeckeElement(d, {w: (-QINV) ** w.length() for w in all_perms(d)})
