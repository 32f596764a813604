"""
Noncommutative polynomials over Scalar in one of the one-sided alphabets.

The E-letters E_1..E_N and the F-letters F_1..F_N live in separate free
algebras.  Inside a free algebra a word is stored as a tuple of letter indices,
and the alphabet is carried by the polynomial (``side`` is "E" or "F").
"""

from collections import namedtuple

from .scalar import Scalar

__all__ = ["Letter", "NCPoly", "deglex_compare", "deglex_key", "render_word"]


class Letter(namedtuple("Letter", "kind index")):
    """A generator symbol E_i or F_i."""

    __slots__ = ()

    def __new__(cls, kind, index):
        if kind not in ("E", "F"):
            raise ValueError("letter kind must be 'E' or 'F'")
        if index < 1:
            raise ValueError("letter index must be >= 1")
        return super().__new__(cls, kind, index)

    def __str__(self):
        return "%s%d" % self


def deglex_key(word):
    """Sort key realizing the degree-lexicographic order."""
    return (len(word), tuple(word))


def deglex_compare(a, b):
    """-1, 0 or 1 as word ``a`` is less than, equal to or greater than ``b``."""
    ka, kb = deglex_key(a), deglex_key(b)
    return (ka > kb) - (ka < kb)


def render_word(word, side="E"):
    if not word:
        return "1"
    return ".".join("%s%d" % (side, i) for i in word)


class NCPoly:
    """
    Element of the free algebra on the ``side`` letters.

    ``terms`` maps index tuples to nonzero Scalars.
    """

    __slots__ = ("side", "terms")

    def __init__(self, side, terms=None):
        if side not in ("E", "F"):
            raise ValueError("side must be 'E' or 'F'")
        self.side = side
        clean = {}
        if terms:
            for w, c in terms.items():
                c = c if isinstance(c, Scalar) else Scalar(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def word(cls, side, word, coef=1):
        return cls(side, {tuple(word): coef})

    @classmethod
    def letter(cls, side, i):
        return cls(side, {(i,): 1})

    def _check(self, other):
        if not isinstance(other, NCPoly):
            raise TypeError("expected NCPoly")
        if other.side != self.side:
            raise ValueError("polynomials over different alphabets")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t[w] + c if w in t else c
        return NCPoly(self.side, t)

    def __neg__(self):
        return NCPoly(self.side, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            c = Scalar(other) if not isinstance(other, Scalar) else other
            return NCPoly(self.side, {w: a * c for w, a in self.terms.items()})
        self._check(other)
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                t[w] = t[w] + c if w in t else c
        return NCPoly(self.side, t)

    def __rmul__(self, other):
        c = Scalar(other) if not isinstance(other, Scalar) else other
        return NCPoly(self.side, {w: c * a for w, a in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.side == other.side and self.terms == other.terms

    def __hash__(self):
        return hash((self.side, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def leading_word(self):
        if not self.terms:
            return None
        return max(self.terms, key=deglex_key)

    def leading_coefficient(self):
        w = self.leading_word()
        return None if w is None else self.terms[w]

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def multidegree(self):
        """Letter-count vector shared by all words, or None if mixed."""
        degs = set()
        for w in self.terms:
            counts = {}
            for i in w:
                counts[i] = counts.get(i, 0) + 1
            degs.add(tuple(sorted(counts.items())))
        return degs.pop() if len(degs) == 1 else None

    def monic(self):
        c = self.leading_coefficient()
        return self if c is None else self * c.inverse()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=deglex_key, reverse=True):
            parts.append("(%s)*%s" % (self.terms[w], render_word(w, self.side)))
        return " + ".join(parts)

    __repr__ = __str__
