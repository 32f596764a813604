"""
Exact coefficient field for all computations.

Elements live in Q(v) where v = q^{1/2}, so every half-integer power of q is a
Laurent monomial in v.  A second indeterminate ``s`` may be adjoined; it is
used to carry a free ratio of scaling constants symbolically through a whole
computation.  Scalars that do not mention ``s`` are ordinary elements of Q(v).

Internally a scalar is a pair (numerator, denominator) of integer polynomials
in (v, s), stored as ``flint.fmpz_mpoly``.  The pair is kept canonical:

* numerator and denominator are coprime (including their integer contents),
* the leading coefficient of the denominator is positive,
* zero is stored as 0/1.

so that two scalars are equal exactly when their stored pairs are equal.
"""

from fractions import Fraction
from functools import lru_cache
import numbers

import flint

__all__ = [
    "LaurentPoly",
    "Scalar",
    "PoleError",
    "v_pow",
    "q_pow",
    "param",
    "q_num",
    "q_factorial",
    "specialize",
    "specialize_mod",
]

_CTX = flint.fmpz_mpoly_ctx.get(("v", "s"), "deglex")
_ONE = _CTX.from_dict({(0, 0): 1})
_ZERO = _CTX.from_dict({})


class PoleError(ZeroDivisionError):
    """The expression has no finite value at the requested point."""


class LaurentPoly:
    """
    Laurent polynomial in v with rational coefficients.

    A lightweight value type; the coefficient map never stores zeros.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in dict(coeffs).items():
                a = Fraction(a)
                if a:
                    c[int(e)] = a
        self._c = c

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls({exp: coef})

    def coefficients(self):
        return dict(self._c)

    def terms(self):
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._c.items(), reverse=True)

    def is_zero(self):
        return not self._c

    def valuation(self):
        return min(self._c) if self._c else None

    def degree(self):
        return max(self._c) if self._c else None

    def __add__(self, other):
        other = _as_laurent(other)
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __call__(self, v0):
        v0 = Fraction(v0)
        if v0 == 0 and any(e < 0 for e in self._c):
            raise PoleError("negative power of v evaluated at v = 0")
        return sum((a * v0 ** e for e, a in self._c.items()), Fraction(0))

    def to_scalar(self):
        return Scalar(self)

    def __repr__(self):
        return "LaurentPoly(%s)" % _render_terms(((e, 0), a) for e, a in self.terms())


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    raise TypeError("cannot convert %r to LaurentPoly" % (x,))


def _terms(p):
    return {(int(ev), int(es)): int(c) for (ev, es), c in p.to_dict().items()}


def _mpoly_hash(p):
    return hash(frozenset(_terms(p).items()))


def _canon(num, den):
    """Canonical (num, den) for the fraction num/den, den != 0."""
    if num.is_zero():
        return _ZERO, _ONE
    if den.is_one():
        return num, den
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    if den.leading_coefficient() < 0:
        num = -num
        den = -den
    return num, den


class Scalar:
    """
    Element of Q(v) (optionally Q(v, s)) in canonical fraction form.

    Immutable.  Supports ``+ - * /`` and ``**`` with ints, Fractions and
    LaurentPolys.  Conjugation is the identity: every admissible value of v
    and s is real.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._num, self._den = value._num, value._den
        elif isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        elif isinstance(value, int):
            self._num, self._den = _CTX.from_dict({(0, 0): value} if value else {}), _ONE
        elif isinstance(value, (Fraction, numbers.Rational)):
            value = Fraction(value)
            num = _CTX.from_dict({(0, 0): value.numerator}) if value else _ZERO
            self._num, self._den = num, _CTX.from_dict({(0, 0): value.denominator})
        elif isinstance(value, LaurentPoly):
            c = value._c
            if not c:
                self._num, self._den = _ZERO, _ONE
            else:
                lo = min(0, min(c))
                lcm = 1
                for a in c.values():
                    lcm = lcm * a.denominator // _gcd(lcm, a.denominator)
                num = _CTX.from_dict({(e - lo, 0): int(a * lcm) for e, a in c.items()})
                den = _CTX.from_dict({(-lo, 0): lcm})
                self._num, self._den = _canon(num, den)
        else:
            raise TypeError("cannot convert %r to Scalar" % (value,))
        self._hash = None

    @classmethod
    def _from_pair(cls, num, den):
        obj = object.__new__(cls)
        obj._num, obj._den = _canon(num, den)
        obj._hash = None
        return obj

    @classmethod
    def _trusted(cls, num, den):
        obj = object.__new__(cls)
        obj._num, obj._den = num, den
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------------
    def is_zero(self):
        return self._num.is_zero()

    def __bool__(self):
        return not self._num.is_zero()

    def is_one(self):
        return self._num.is_one() and self._den.is_one()

    def has_param(self):
        """True if the adjoined parameter s occurs."""
        return self._num.degrees()[1] > 0 or self._den.degrees()[1] > 0

    def numerator_terms(self):
        """{(v_exp, s_exp): int} of the canonical numerator."""
        return _terms(self._num)

    def denominator_terms(self):
        return _terms(self._den)

    def as_laurent(self):
        """
        The value as a LaurentPoly, or None when it is not one.

        Requires an s-free scalar whose denominator is a monomial in v.
        """
        if self.has_param():
            return None
        dterms = _terms(self._den)
        if len(dterms) != 1:
            return None
        ((dv, _), dc), = dterms.items()
        return LaurentPoly({e[0] - dv: Fraction(int(a), int(dc))
                            for e, a in _terms(self._num).items()})

    def conjugate(self):
        return self

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if other._num.is_zero():
            return self
        if self._num.is_zero():
            return other
        a, b, c, d = self._num, self._den, other._num, other._den
        if b.is_one() and d.is_one():
            return Scalar._trusted_or_zero(a + c, _ONE)
        if b == d:
            return Scalar._from_pair(a + c, b)
        g = b.gcd(d)
        if g.is_one():
            return Scalar._from_pair(a * d + c * b, b * d)
        bg, dg = b / g, d / g
        return Scalar._from_pair(a * dg + c * bg, b * dg)

    @classmethod
    def _trusted_or_zero(cls, num, den):
        return cls._trusted(num, den) if not num.is_zero() else cls._trusted(_ZERO, _ONE)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._trusted(-self._num, self._den)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a, b, c, d = self._num, self._den, other._num, other._den
        if a.is_zero() or c.is_zero():
            return _SCALAR_ZERO
        if b.is_one() and d.is_one():
            return Scalar._trusted(a * c, _ONE)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._trusted(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self._num.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        num, den = self._den, self._num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._trusted(num, den)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        num, den = self._num ** n, self._den ** n
        return Scalar._trusted(num, den)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self._num == other._num and self._den == other._den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_mpoly_hash(self._num), _mpoly_hash(self._den)))
        return self._hash

    # -- rendering ----------------------------------------------------------
    def __str__(self):
        num = _render_terms(_terms(self._num).items())
        if self._den.is_one():
            return num
        return "(%s)/(%s)" % (num, _render_terms(_terms(self._den).items()))

    def __repr__(self):
        return "Scalar(%s)" % self


_SCALAR_ZERO = Scalar(0)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return Scalar(x)
    return None


def _render_terms(items):
    """Render {(v_exp, s_exp): coef} as a polynomial string, highest terms first."""
    items = sorted(items, key=lambda t: (t[0][1], t[0][0]), reverse=True)
    if not items:
        return "0"
    out = []
    for k, ((ev, es), c) in enumerate(items):
        c = Fraction(int(c)) if not isinstance(c, Fraction) else c
        neg = c < 0
        c = -c if neg else c
        factors = []
        if es:
            factors.append("s" if es == 1 else "s^%d" % es)
        if ev:
            factors.append("v" if ev == 1 else "v^%d" % ev)
        if c != 1 or not factors:
            factors.insert(0, str(c))
        body = "*".join(factors)
        if k == 0:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


@lru_cache(maxsize=None)
def v_pow(n):
    """v**n as a Scalar (n may be negative)."""
    if n >= 0:
        return Scalar._trusted(_CTX.from_dict({(n, 0): 1}), _ONE)
    return Scalar._trusted(_ONE, _CTX.from_dict({(-n, 0): 1}))


def q_pow(n):
    """q**n = v**(2n)."""
    return v_pow(2 * n)


def param():
    """The adjoined indeterminate s."""
    return Scalar._trusted(_CTX.from_dict({(0, 1): 1}), _ONE)


@lru_cache(maxsize=None)
def q_num(x):
    """The q-number [x] = (q^x - q^-x)/(q - q^-1)."""
    return (q_pow(x) - q_pow(-x)) / (q_pow(1) - q_pow(-1))


@lru_cache(maxsize=None)
def q_factorial(n):
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = Scalar(1)
    for k in range(1, n + 1):
        out = out * q_num(k)
    return out


def _eval_mpoly(p, v0, s0):
    total = Fraction(0)
    for (ev, es), c in _terms(p).items():
        if es and s0 is None:
            raise ValueError("scalar depends on s; pass a value for s0")
        total += int(c) * v0 ** ev * (s0 ** es if es else 1)
    return total


def specialize(s, v0, s0=None):
    """
    Exact rational value of ``s`` at v = v0 (and s = s0 when s occurs).

    Raises PoleError if the canonical denominator vanishes there.
    """
    s = Scalar(s) if not isinstance(s, Scalar) else s
    v0 = Fraction(v0)
    if v0 == 0:
        raise ValueError("v0 must be nonzero")
    s0 = None if s0 is None else Fraction(s0)
    den = _eval_mpoly(s._den, v0, s0)
    if den == 0:
        raise PoleError("%s has a pole at v = %s" % (s, v0))
    return _eval_mpoly(s._num, v0, s0) / den


def specialize_mod(s, v0, p, s0=None):
    """Value of ``s`` in Z/p at v = v0 (s = s0); PoleError on a vanishing denominator."""
    def ev(poly):
        t = 0
        for (e1, e2), c in _terms(poly).items():
            if e2 and s0 is None:
                raise ValueError("scalar depends on s; pass a value for s0")
            t += int(c) * pow(v0, e1, p) * (pow(s0, e2, p) if e2 else 1)
        return t % p
    d = ev(s._den)
    if d == 0:
        raise PoleError("denominator vanishes mod %d" % p)
    return ev(s._num) * pow(d, -1, p) % p
