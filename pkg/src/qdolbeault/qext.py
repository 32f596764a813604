"""
Braided exterior algebras of the radical u_+ and of its dual u_-.

u_+ is the fundamental module of U_q(sl_N) with basis e_1..e_N; u_- has the
dual basis f_1..f_N.  Exterior vectors are stored in ordered bases: e_I is
e_{i_1} ^ ... ^ e_{i_k} with i_1 < ... < i_k, while f_I is written in the
opposite order f_{i_k} ^ ... ^ f_{i_1}.
"""

import itertools
from functools import lru_cache

from .errors import InternalInconsistency, NotLevi
from .linalg import ScalarMatrix
from .scalar import Scalar, q_factorial, q_pow, v_pow
from .uqalg import is_levi

__all__ = [
    "rhat",
    "rhat_dual",
    "braid_relation_holds",
    "braiding_eigenspaces",
    "TensorVector",
    "ExtVector",
    "wedge",
    "antisymmetrize",
    "project_pi",
    "raw_pairing",
    "pairing",
    "hermitian",
    "ScalingProfile",
    "levi_action",
    "subsets",
]

_ZERO = Scalar(0)
_ONE = Scalar(1)


def _idx(N, i, j):
    return (i - 1) * N + (j - 1)


@lru_cache(maxsize=None)
def rhat(N):
    """Braiding on u_+ (x) u_+ in the basis e_i (x) e_j, ordered lexicographically."""
    if N < 2:
        raise ValueError("N must be at least 2")
    q, qi = q_pow(1), q_pow(-1)
    cols = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            col = [_ZERO] * (N * N)
            if i == j:
                col[_idx(N, i, i)] = q
            elif i > j:
                col[_idx(N, j, i)] = _ONE
            else:
                col[_idx(N, j, i)] = _ONE
                col[_idx(N, i, j)] = q - qi
            cols.append(col)
    return ScalarMatrix.from_columns(cols, N * N)


@lru_cache(maxsize=None)
def rhat_dual(N):
    """Braiding on u_- (x) u_-: the same rules with the index order reversed."""
    R = rhat(N)

    def rev(k):
        i, j = divmod(k, N)
        return (N - 1 - i) * N + (N - 1 - j)

    n = N * N
    return ScalarMatrix([[R[rev(a), rev(b)] for b in range(n)] for a in range(n)], n)


def braid_relation_holds(R, N):
    """(R x 1)(1 x R)(R x 1) == (1 x R)(R x 1)(1 x R) on three tensor factors."""
    one = ScalarMatrix.identity(N)
    a = R.kron(one)
    b = one.kron(R)
    return a * b * a == b * a * b


class TensorVector:
    """Vector in the k-th tensor power; ``terms`` maps index words to Scalars."""

    __slots__ = ("sign", "degree", "terms")

    def __init__(self, sign, degree, terms=None):
        if sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        self.sign = sign
        self.degree = degree
        self.terms = {}
        for w, c in (terms or {}).items():
            if len(w) != degree:
                raise ValueError("word %r has wrong length" % (w,))
            c = c if isinstance(c, Scalar) else Scalar(c)
            if c:
                self.terms[tuple(w)] = c

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, _ZERO) + c
        return TensorVector(self.sign, self.degree, t)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TensorVector(self.sign, self.degree, {w: a * c for w, a in self.terms.items()})

    def _check(self, other):
        if self.sign != other.sign or self.degree != other.degree:
            raise ValueError("incompatible tensor vectors")

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (self.sign, self.degree, self.terms) == (other.sign, other.degree, other.terms)

    def __hash__(self):
        return hash((self.sign, self.degree, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def as_column(self, N):
        words = list(itertools.product(range(1, N + 1), repeat=self.degree))
        return [self.terms.get(w, _ZERO) for w in words]

    def __str__(self):
        letter = "e" if self.sign == "+" else "f"
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%s" % (c, "#".join("%s%d" % (letter, i) for i in w))
                          for w, c in sorted(self.terms.items()))

    __repr__ = __str__


class ExtVector:
    """Element of the exterior algebra of u_+ (sign '+') or u_- (sign '-')."""

    __slots__ = ("sign", "terms")

    def __init__(self, sign, terms=None):
        if sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        self.sign = sign
        self.terms = {}
        for I, c in (terms or {}).items():
            I = tuple(I)
            if list(I) != sorted(set(I)):
                raise ValueError("subset %r must be strictly increasing" % (I,))
            c = c if isinstance(c, Scalar) else Scalar(c)
            if c:
                self.terms[I] = c

    @classmethod
    def basis(cls, sign, I):
        return cls(sign, {tuple(I): _ONE})

    def degrees(self):
        return sorted({len(I) for I in self.terms})

    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("inhomogeneous exterior vector")
        return ds[0] if ds else None

    def __add__(self, other):
        if self.sign != other.sign:
            raise ValueError("mismatched exterior algebras")
        t = dict(self.terms)
        for I, c in other.terms.items():
            t[I] = t.get(I, _ZERO) + c
        return ExtVector(self.sign, t)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ExtVector(self.sign, {I: a * c for I, a in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ExtVector):
            return NotImplemented
        return self.sign == other.sign and self.terms == other.terms

    def __hash__(self):
        return hash((self.sign, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        letter = "e" if self.sign == "+" else "f"
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%s_{%s}" % (c, letter, "".join(map(str, I)) or "0")
                          for I, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])))

    __repr__ = __str__


def _order_word(sign, word):
    """
    Reduce a wedge word to (coefficient, ordered subset), or None if zero.

    Each pair out of basis order costs a factor -q: for u_+ the basis order
    is increasing, for u_- it is decreasing.
    """
    if len(set(word)) < len(word):
        return None
    bad = 0
    for a, b in itertools.combinations(word, 2):
        if (a > b) if sign == "+" else (a < b):
            bad += 1
    return (-q_pow(1)) ** bad, tuple(sorted(word))


def _word_to_ext(sign, word, coef=_ONE):
    r = _order_word(sign, word)
    if r is None:
        return ExtVector(sign)
    c, I = r
    return ExtVector(sign, {I: coef * c})


def _ordered(sign, I):
    """The letter sequence of the basis element with subset I."""
    return tuple(I) if sign == "+" else tuple(reversed(I))


def wedge(x, y):
    """Exterior product, reduced to the ordered basis."""
    if x.sign != y.sign:
        raise ValueError("cannot wedge elements of different exterior algebras")
    out = ExtVector(x.sign)
    for I, a in x.terms.items():
        for J, b in y.terms.items():
            word = _ordered(x.sign, I) + _ordered(x.sign, J)
            out = out + _word_to_ext(x.sign, word, a * b)
    return out


def project_pi(t, sign=None):
    """Map a tensor to the exterior algebra by replacing (x) with ^."""
    sign = sign or t.sign
    out = ExtVector(sign)
    for w, c in t.terms.items():
        out = out + _word_to_ext(sign, w, c)
    return out


def _inversions(seq):
    return sum(1 for a, b in itertools.combinations(seq, 2) if a > b)


def antisymmetrize(I, sign="+"):
    """
    Quantum antisymmetrizer of the basis element e_I (or f_I).

    Sum over orderings p of I of (-q)^{inv(p)} times the tensor word; for
    u_- the word is written in reverse.
    """
    I = tuple(sorted(I))
    terms = {}
    mq = -q_pow(1)
    for perm in itertools.permutations(I):
        word = perm if sign == "+" else tuple(reversed(perm))
        terms[word] = mq ** _inversions(perm)
    return TensorVector(sign, len(I), terms)


def tensor_pairing(y, x):
    """<y_k # ... # y_1, x_1 # ... # x_k>: the first slot is read backwards."""
    if y.degree != x.degree or y.sign != "-" or x.sign != "+":
        raise ValueError("pairing needs equal degrees, u_- on the left and u_+ on the right")
    total = _ZERO
    for w, a in y.terms.items():
        b = x.terms.get(tuple(reversed(w)))
        if b is not None:
            total = total + a * b
    return total


def inverse_pi(v, sign):
    """Preimage of an ordered basis element in the antisymmetric tensors."""
    I, = v.terms
    k = len(I)
    scale = v_pow(-k * (k - 1)) / q_factorial(k)
    return antisymmetrize(I, sign).scale(scale * v.terms[I])


def raw_pairing(y, x):
    """
    Pairing of exterior vectors transported from the tensor pairing.

    Computed by lifting both sides to antisymmetric tensors; gives
    q^{-k(k-1)/2}/[k]! on matching basis elements.
    """
    _check_pair(y, x)
    total = _ZERO
    for I, a in y.terms.items():
        ly = inverse_pi(ExtVector.basis("-", I), "-")
        for J, b in x.terms.items():
            if len(I) != len(J):
                continue
            lx = inverse_pi(ExtVector.basis("+", J), "+")
            total = total + a * b * tensor_pairing(ly, lx)
    return total


def _check_pair(y, x):
    if y.sign != "-" or x.sign != "+":
        raise ValueError("pairing takes a u_- vector and a u_+ vector")
    dy, dx = y.degrees(), x.degrees()
    if dy and dx and dy != dx:
        raise ValueError("degree mismatch in pairing: %s vs %s" % (dy, dx))


class ScalingProfile:
    """
    Per-degree rescalings of the pairing (lambdas) and Hermitian product (lambda primes).

    ``c[k] = lambdas[k]**2 / lambda_primes[k]``; conjugation is trivial.
    """

    def __init__(self, lambdas, lambda_primes):
        if len(lambdas) != len(lambda_primes):
            raise ValueError("profiles must have equal length")
        self.lambdas = [Scalar(x) if not isinstance(x, Scalar) else x for x in lambdas]
        self.lambda_primes = [Scalar(x) if not isinstance(x, Scalar) else x
                              for x in lambda_primes]
        if any(not x for x in self.lambdas + self.lambda_primes):
            raise ValueError("profile entries must be nonzero")
        self.N = len(lambdas) - 1

    @classmethod
    def normalized(cls, N):
        return cls([1] * (N + 1), [1] * (N + 1))

    @classmethod
    def from_c(cls, cs):
        """Profile with unit pairing and Hermitian weights 1/c_k."""
        return cls([1] * len(cs), [Scalar(c).inverse() if not isinstance(c, Scalar)
                                   else c.inverse() for c in cs])

    @property
    def c(self):
        return [l * l / lp for l, lp in zip(self.lambdas, self.lambda_primes)]


def pairing(y, x, profile):
    """Normalized pairing: lambda_k on matching basis elements, zero otherwise."""
    _check_pair(y, x)
    total = _ZERO
    for I, a in y.terms.items():
        b = x.terms.get(I)
        if b is not None:
            total = total + a * b * profile.lambdas[len(I)]
    return total


def hermitian(x, z, profile):
    """Diagonal Hermitian product lambda'_k delta_{IJ}; conjugate-linear in x."""
    if x.sign != "+" or z.sign != "+":
        raise ValueError("the Hermitian product is defined on u_+")
    dx, dz = x.degrees(), z.degrees()
    if dx and dz and dx != dz:
        raise ValueError("degree mismatch in Hermitian product: %s vs %s" % (dx, dz))
    total = _ZERO
    for I, a in x.terms.items():
        b = z.terms.get(I)
        if b is not None:
            total = total + a.conjugate() * b * profile.lambda_primes[len(I)]
    return total


def subsets(N, k=None):
    """Subsets of 1..N ordered by size, then lexicographically."""
    ks = range(N + 1) if k is None else [k]
    return [I for kk in ks for I in itertools.combinations(range(1, N + 1), kk)]


# -- Levi action -----------------------------------------------------------------

def _xi_pair(lam, i, N):
    return sum(lam[k - 1] for k in range(i, N + 1))


def _act_letter(letter, vec, N):
    """Action of one generator on a tensor vector via the iterated coproduct."""
    kind, x = letter
    out = {}

    def add(w, c):
        if c:
            c = out.get(w, _ZERO) + c
            if c:
                out[w] = c
            else:
                out.pop(w, None)

    if kind == "K":
        for w, c in vec.items():
            add(w, c * q_pow(sum(_xi_pair(x, i, N) for i in w)))
        return out
    j = x
    al = tuple(2 if k == j else (-1 if abs(k - j) == 1 else 0) for k in range(1, N + 1))
    for w, c in vec.items():
        for t, i in enumerate(w):
            if kind == "E":
                # K_j on the legs before t, E_j on leg t
                if i != j + 1:
                    continue
                pre = sum(_xi_pair(al, a, N) for a in w[:t])
                add(w[:t] + (i - 1,) + w[t + 1:], -c * v_pow(2 * pre - 1))
            else:
                # F_j on leg t, K_j^{-1} on the legs after it
                if i != j:
                    continue
                post = sum(_xi_pair(al, a, N) for a in w[t + 1:])
                add(w[:t] + (i + 1,) + w[t + 1:], -c * v_pow(1 - 2 * post))
    return out


def levi_action_tensor(a, vec):
    """Action of a Levi element on a tensor (dict word -> Scalar) of u_+."""
    if not is_levi(a):
        raise NotLevi("element is not in the Levi subalgebra")
    N = a.alg.N
    total = {}
    for (f, lam, e), c in a.terms.items():
        cur = dict(vec)
        letters = [("F", i) for i in f] + [("K", lam)] + [("E", i) for i in e]
        for letter in reversed(letters):
            cur = _act_letter(letter, cur, N)
        for w, d in cur.items():
            total[w] = total.get(w, _ZERO) + c * d
    return {w: c for w, c in total.items() if c}


def levi_action(a, x):
    """Action of a Levi element on an exterior vector of u_+."""
    if x.sign != "+":
        raise ValueError("the Levi action is implemented on u_+")
    out = ExtVector("+")
    for I, c in x.terms.items():
        res = levi_action_tensor(a, {tuple(I): c})
        for w, d in res.items():
            out = out + _word_to_ext("+", w, d)
    return out


# -- structural checks -----------------------------------------------------------

def eigen_residuals(N):
    """Apply R to each listed eigenvector; yields (label, residual column)."""
    R = rhat(N)
    pos, neg = braiding_eigenspaces(N)
    q, qi = q_pow(1), q_pow(-1)
    for label, vecs, ev in (("positive", pos, q), ("negative", neg, -qi)):
        for t in vecs:
            col = t.as_column(N)
            img = R.apply(col)
            yield label, t, [a - ev * b for a, b in zip(img, col)]


def braiding_eigenspaces(N):
    """
    The listed eigenvectors of the braiding, checked by direct application.

    Returns (eigenvalue q basis, eigenvalue -q^{-1} basis) as TensorVectors.
    """
    qi, q = q_pow(-1), q_pow(1)
    pos = [TensorVector("+", 2, {(i, i): 1}) for i in range(1, N + 1)]
    neg = []
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            pos.append(TensorVector("+", 2, {(i, j): 1, (j, i): qi}))
            neg.append(TensorVector("+", 2, {(i, j): 1, (j, i): -q}))
    R = rhat(N)
    for vecs, ev in ((pos, q), (neg, -qi)):
        for t in vecs:
            col = t.as_column(N)
            if R.apply(col) != [ev * a for a in col]:
                raise InternalInconsistency("listed vector %s is not an eigenvector" % t)
    return pos, neg


def in_antisymmetric_tensors(t, N):
    """True if (R_j + q^{-1}) t = 0 at every adjacent pair of legs j."""
    R = rhat(N) if t.sign == "+" else rhat_dual(N)
    qi = q_pow(-1)
    k = t.degree
    for j in range(k - 1):
        acc = {}
        for w, c in t.terms.items():
            a, b = w[j], w[j + 1]
            col = _idx(N, a, b)
            for r in range(N * N):
                m = R[r, col]
                if m:
                    a2, b2 = divmod(r, N)
                    nw = w[:j] + (a2 + 1, b2 + 1) + w[j + 2:]
                    acc[nw] = acc.get(nw, _ZERO) + c * m
            acc[w] = acc.get(w, _ZERO) + c * qi
        if any(v for v in acc.values()):
            return False
    return True


def dual_relations(N):
    """The annihilator candidates f_a#f_a and f_i#f_j + q f_j#f_i (i < j)."""
    q = q_pow(1)
    out = [TensorVector("-", 2, {(a, a): 1}) for a in range(1, N + 1)]
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            out.append(TensorVector("-", 2, {(i, j): 1, (j, i): q}))
    return out


__all__ += ["TensorVector", "tensor_pairing", "inverse_pi", "eigen_residuals",
            "in_antisymmetric_tensors", "dual_relations", "levi_action_tensor"]
