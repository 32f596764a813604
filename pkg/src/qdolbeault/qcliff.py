"""
Quantum Clifford operators on the exterior algebra of u_+.

Operators are dense 2^N x 2^N matrices over the subset basis, ordered by
size and then lexicographically (see :func:`qext.subsets`).
"""

from functools import lru_cache

from .linalg import ScalarMatrix, rank_mod_p
from .qext import ExtVector, subsets
from .scalar import Scalar, q_pow, specialize

__all__ = [
    "CliffOp",
    "interior",
    "exterior",
    "gamma",
    "gamma_star",
    "gamma_block",
    "gamma_star_block",
    "hermitian_adjoint",
    "degree_projector",
    "spanning_rank",
]

_ZERO = Scalar(0)


class CliffOp:
    """Endomorphism of the exterior algebra of u_+ for a fixed rank N."""

    __slots__ = ("N", "matrix")

    def __init__(self, N, matrix):
        self.N = N
        self.matrix = matrix

    @classmethod
    def zero(cls, N):
        return cls(N, ScalarMatrix.zeros(2 ** N))

    @classmethod
    def identity(cls, N):
        return cls(N, ScalarMatrix.identity(2 ** N))

    def basis(self):
        return subsets(self.N)

    def __add__(self, other):
        return CliffOp(self.N, self.matrix + other.matrix)

    def __sub__(self, other):
        return CliffOp(self.N, self.matrix - other.matrix)

    def __neg__(self):
        return CliffOp(self.N, -self.matrix)

    def __mul__(self, other):
        if isinstance(other, CliffOp):
            return CliffOp(self.N, self.matrix * other.matrix)
        return CliffOp(self.N, self.matrix.scale(other))

    def __rmul__(self, c):
        return CliffOp(self.N, self.matrix.scale(c))

    def __eq__(self, other):
        if not isinstance(other, CliffOp):
            return NotImplemented
        return self.N == other.N and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.N, self.matrix))

    def is_zero(self):
        return self.matrix.is_zero()

    def entry(self, J, I):
        """Coefficient of e_J in the image of e_I."""
        idx = _index(self.N)
        return self.matrix[idx[tuple(J)], idx[tuple(I)]]

    def apply(self, x):
        idx = _index(self.N)
        basis = subsets(self.N)
        col = [_ZERO] * len(basis)
        for I, c in x.terms.items():
            col[idx[I]] = c
        out = self.matrix.apply(col)
        return ExtVector("+", {basis[k]: c for k, c in enumerate(out) if c})

    def specialize(self, v0):
        """Entrywise exact rational specialization at v = v0."""
        return [[specialize(a, v0) for a in row] for row in self.matrix.data]

    def degree_shift(self):
        """The common change in subset size, or None if mixed or zero."""
        basis = subsets(self.N)
        shifts = {len(basis[i]) - len(basis[j]) for i, j, _ in self.matrix.nonzero_entries()}
        return shifts.pop() if len(shifts) == 1 else None

    def __str__(self):
        return str(self.matrix)


@lru_cache(maxsize=None)
def _index(N):
    return {I: k for k, I in enumerate(subsets(N))}


def _check(a, N):
    if not 1 <= a <= N:
        raise ValueError("Clifford index %r out of range 1..%d" % (a, N))


def _from_map(N, fn):
    basis = subsets(N)
    idx = _index(N)
    n = len(basis)
    data = [[_ZERO] * n for _ in range(n)]
    for col, I in enumerate(basis):
        for J, c in fn(I):
            data[idx[J]][col] = c
    return CliffOp(N, ScalarMatrix(data, n))


@lru_cache(maxsize=None)
def interior(a, N):
    """Interior multiplication: e_I -> (-q)^{r-1} e_{I minus a} where a = i_r."""
    _check(a, N)
    mq = -q_pow(1)

    def fn(I):
        if a in I:
            r = I.index(a)
            yield I[:r] + I[r + 1:], mq ** r

    return _from_map(N, fn)


@lru_cache(maxsize=None)
def exterior(a, N):
    """Left multiplication by e_a, reordered into the increasing basis."""
    _check(a, N)
    mq = -q_pow(1)

    def fn(I):
        if a not in I:
            J = tuple(sorted(I + (a,)))
            yield J, mq ** J.index(a)

    return _from_map(N, fn)


@lru_cache(maxsize=None)
def degree_projector(N, k):
    basis = subsets(N)
    n = len(basis)
    data = [[Scalar(1) if i == j and len(basis[i]) == k else _ZERO for j in range(n)]
            for i in range(n)]
    return CliffOp(N, ScalarMatrix(data, n))


def gamma(i, profile, k):
    """Rescaled interior multiplication acting on degree-k vectors (1 <= k <= N)."""
    N = profile.N
    if not 1 <= k <= N:
        raise ValueError("degree %r out of range 1..%d" % (k, N))
    lam = profile.lambdas
    return (interior(i, N) * degree_projector(N, k)) * (lam[k] / lam[k - 1])


def gamma_star(i, profile, k):
    """Adjoint rescaled exterior multiplication on degree-k vectors (0 <= k < N)."""
    N = profile.N
    if not 0 <= k <= N - 1:
        raise ValueError("degree %r out of range 0..%d" % (k, N - 1))
    lam, lp = profile.lambdas, profile.lambda_primes
    c = (lam[k + 1] / lam[k]) * (lp[k] / lp[k + 1])
    return (exterior(i, N) * degree_projector(N, k)) * c


def gamma_block(i, profile):
    out = CliffOp.zero(profile.N)
    for k in range(1, profile.N + 1):
        out = out + gamma(i, profile, k)
    return out


def gamma_star_block(i, profile):
    out = CliffOp.zero(profile.N)
    for k in range(profile.N):
        out = out + gamma_star(i, profile, k)
    return out


def hermitian_adjoint(op, profile):
    """Adjoint for the diagonal product with weight lambda'_{|I|} on e_I."""
    N = op.N
    basis = subsets(N)
    w = [profile.lambda_primes[len(I)] for I in basis]
    n = len(basis)
    m = op.matrix
    data = [[m[j, i].conjugate() * w[j] / w[i] if m[j, i] else _ZERO for j in range(n)]
            for i in range(n)]
    return CliffOp(N, ScalarMatrix(data, n))


def spanning_rank(N, p=None):
    """
    Rank of the products (interior monomial) * (exterior monomial), as vectors.

    Evaluated modulo a prime at a random v; a value of 4^N certifies that the
    products span all endomorphisms.
    """
    ops = []
    for I in subsets(N):
        left = CliffOp.identity(N)
        for a in I:
            left = left * interior(a, N)
        for J in subsets(N):
            op = left
            for b in J:
                op = op * exterior(b, N)
            ops.append([x for row in op.matrix.data for x in row])
    return rank_mod_p(ops) if p is None else rank_mod_p(ops, p)

