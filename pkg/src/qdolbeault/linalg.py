"""Small dense exact matrices over Scalar."""

import random

from .scalar import PoleError, Scalar, specialize_mod

__all__ = ["ScalarMatrix", "rank_mod_p", "DEFAULT_PRIME"]

DEFAULT_PRIME = 2_147_483_647

_ZERO = Scalar(0)
_ONE = Scalar(1)


class ScalarMatrix:
    """Row-major matrix of Scalars; immutable by convention."""

    __slots__ = ("rows", "ncols", "data")

    def __init__(self, data, ncols=None):
        self.data = [[x if isinstance(x, Scalar) else Scalar(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else (ncols or 0)

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls([[_ZERO] * m for _ in range(n)], m)

    @classmethod
    def identity(cls, n):
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols, nrows):
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(nrows)], len(cols))

    @property
    def shape(self):
        return (self.rows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def with_entry(self, i, j, val):
        data = [list(r) for r in self.data]
        data[i][j] = val
        return ScalarMatrix(data, self.ncols)

    def __add__(self, other):
        self._same_shape(other)
        return ScalarMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                            self.ncols)

    def __neg__(self):
        return ScalarMatrix([[-a for a in r] for r in self.data], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c)
        return ScalarMatrix([[a * c for a in r] for r in self.data], self.ncols)

    def __mul__(self, other):
        if not isinstance(other, ScalarMatrix):
            return self.scale(other)
        if self.ncols != other.rows:
            raise ValueError("shape mismatch %s * %s" % (self.shape, other.shape))
        cols = list(zip(*other.data)) if other.data else []
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in cols:
                acc = _ZERO
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ScalarMatrix(out, other.ncols)

    __matmul__ = __mul__

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self):
        return ScalarMatrix([list(c) for c in zip(*self.data)], self.rows)

    def apply(self, vec):
        return [sum((a * b for a, b in zip(r, vec) if a and b), _ZERO) for r in self.data]

    def kron(self, other):
        out = []
        for r in self.data:
            for s in other.data:
                out.append([a * b for a in r for b in s])
        return ScalarMatrix(out, self.ncols * other.ncols)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def is_zero(self):
        return not any(a for r in self.data for a in r)

    def nonzero_entries(self):
        return [(i, j, a) for i, r in enumerate(self.data) for j, a in enumerate(r) if a]

    def map(self, fn):
        return ScalarMatrix([[fn(a) for a in r] for r in self.data], self.ncols)

    def rank(self):
        """Exact rank by fraction-field Gaussian elimination."""
        rows = [list(r) for r in self.data]
        rank, col = 0, 0
        nrows, ncols = len(rows), self.ncols
        while rank < nrows and col < ncols:
            piv = next((i for i in range(rank, nrows) if rows[i][col]), None)
            if piv is None:
                col += 1
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = rows[rank][col].inverse()
            prow = [a * inv for a in rows[rank]]
            rows[rank] = prow
            for i in range(rank + 1, nrows):
                f = rows[i][col]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
            rank += 1
            col += 1
        return rank

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.data)


def rank_mod_p(rows, p=DEFAULT_PRIME, v0=None, rng=None):
    """
    Rank of a list of Scalar rows after specializing v to v0 modulo p.

    The specialized rank never exceeds the generic rank, so a full-rank
    result certifies full generic rank.  ``v0`` defaults to a random residue.
    """
    rng = rng or random.Random(0)
    while True:
        x = v0 if v0 is not None else rng.randrange(2, p - 1)
        try:
            mat = [[specialize_mod(a, x, p) if a else 0 for a in r] for r in rows]
            break
        except PoleError:
            if v0 is not None:
                raise
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        prow = [a * inv % p for a in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], prow)]
        rank += 1
    return rank
