"""
U_q(sl_{N+1}) with Cartan part indexed by the weight lattice.

Elements are kept in triangular normal form: sums of monomials
``F_word * K_lambda * E_word`` where lambda is given in fundamental-weight
coordinates and both words are irreducible for the completed Serre system.

Levi membership
---------------
The Levi subalgebra here is generated by all K_lambda together with E_j, F_j
for j < N.  The rewrite rules are homogeneous for the letter-count grading,
so a rule whose leading word avoids the letter N has a tail that avoids it as
well.  Hence normal words in letters 1..N-1 are exactly the normal words of
the rank N-1 Serre system, and normal monomials without the letter N form a
basis of the Levi subalgebra.  Deciding membership therefore reduces to
inspecting letters of the normal form.
"""

import re
from functools import lru_cache

from .errors import DegreeBoundExceeded
from .freealg import deglex_key, render_word
from .groebner import gb_complete
from .scalar import Scalar, q_pow, v_pow

__all__ = [
    "UqAlgebra",
    "UqElement",
    "Tensor",
    "get_algebra",
    "normal_form",
    "coproduct",
    "antipode",
    "antipode_inv",
    "counit",
    "star",
    "adjoint_action",
    "weight",
    "is_levi",
    "equals_mod_levi",
]

_ONE = Scalar(1)


def _acc(d, key, c):
    if key in d:
        c = d[key] + c
        if c:
            d[key] = c
        else:
            del d[key]
    elif c:
        d[key] = c


class UqAlgebra:
    """
    The algebra for a fixed rank N (2 <= N <= 4) and Gröbner degree bound.

    Holds the completed rewrite systems and all multiplication caches.  Use
    :func:`get_algebra` to share one instance per (N, bound).
    """

    def __init__(self, N, degree_bound=None):
        if not isinstance(N, int) or not 2 <= N <= 4:
            raise ValueError("rank N must be an integer in 2..4, got %r" % (N,))
        if degree_bound is None:
            degree_bound = 2 * N + 4
        if degree_bound < 3:
            raise ValueError("degree_bound must be at least 3")
        self.N = N
        self.degree_bound = degree_bound
        self.esys = gb_complete("E", N, degree_bound)
        self.fsys = gb_complete("F", N, degree_bound)
        self.zero_weight = (0,) * N
        self._straighten = {}
        self._mono_mul = {}
        self._delta = {}
        self._anti = {}
        self._anti_inv = {}
        self._star = {}

    # -- lattice helpers ----------------------------------------------------
    def alpha(self, i):
        """Simple root alpha_i in fundamental-weight coordinates."""
        return tuple(2 if k == i else (-1 if abs(k - i) == 1 else 0)
                     for k in range(1, self.N + 1))

    def omega(self, i):
        return tuple(1 if k == i else 0 for k in range(1, self.N + 1))

    def cartan(self, i, j):
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0

    @staticmethod
    def pair(lam, word):
        """(lambda, weight of word) with the word read as a sum of simple roots."""
        return sum(lam[i - 1] for i in word)

    # -- constructors -------------------------------------------------------
    def element(self, terms):
        return UqElement(self, terms)

    def zero(self):
        return UqElement(self, {})

    def one(self):
        return self.scalar(1)

    def scalar(self, c):
        return UqElement(self, {((), self.zero_weight, ()): c})

    def E(self, i):
        self._check_index(i)
        return UqElement(self, {((), self.zero_weight, (i,)): _ONE})

    def F(self, i):
        self._check_index(i)
        return UqElement(self, {((i,), self.zero_weight, ()): _ONE})

    def K(self, lam):
        lam = tuple(lam)
        if len(lam) != self.N:
            raise ValueError("weight must have %d coordinates" % self.N)
        return UqElement(self, {((), lam, ()): _ONE})

    def K_alpha(self, i, sign=1):
        return self.K(tuple(sign * x for x in self.alpha(i)))

    def _check_index(self, i):
        if not 1 <= i <= self.N:
            raise ValueError("generator index %r out of range 1..%d" % (i, self.N))

    # -- normal-form machinery ----------------------------------------------
    def _check_len(self, n):
        if n > self.degree_bound:
            raise DegreeBoundExceeded(n, self.degree_bound)

    def reduce_e(self, word):
        self._check_len(len(word))
        return self.esys.reduce_word(word)

    def reduce_f(self, word):
        self._check_len(len(word))
        return self.fsys.reduce_word(word)

    def _straighten_letter(self, a, fword):
        # E_a * F_fword rewritten as sum of (F-word, K-weight, E-word)
        out = {(fword, self.zero_weight, (a,)): _ONE}
        al = self.alpha(a)
        neg = tuple(-x for x in al)
        qq = q_pow(1) - q_pow(-1)
        n = len(fword)
        for r in range(n):
            if fword[r] != a:
                continue
            c = sum(self.cartan(a, b) for b in fword[r + 1:])
            rest = fword[:r] + fword[r + 1:]
            _acc(out, (rest, al, ()), q_pow(-c) / qq)
            _acc(out, (rest, neg, ()), -q_pow(c) / qq)
        return out

    def straighten(self, eword, fword):
        """E_eword * F_fword as a dict of raw (unreduced) triangular monomials."""
        key = (eword, fword)
        hit = self._straighten.get(key)
        if hit is not None:
            return hit
        if not eword or not fword:
            res = {(fword, self.zero_weight, eword): _ONE}
        else:
            res = {}
            head, a = eword[:-1], eword[-1]
            for (f1, mu, e1), c in self._straighten_letter(a, fword).items():
                for (f2, nu, e2), d in self.straighten(head, f1).items():
                    # f2 K_nu e2 K_mu e1 = q^{-(mu, wt e2)} f2 K_{nu+mu} e2 e1
                    k = tuple(x + y for x, y in zip(nu, mu))
                    _acc(res, (f2, k, e2 + e1), c * d * q_pow(-self.pair(mu, e2)))
        self._straighten[key] = res
        return res

    def mono_mul(self, m1, m2):
        """Product of two normal monomials, normal-formed."""
        key = (m1, m2)
        hit = self._mono_mul.get(key)
        if hit is not None:
            return hit
        f1, l1, e1 = m1
        f2, l2, e2 = m2
        res = {}
        for (fp, mu, ep), c in self.straighten(e1, f2).items():
            ex = -self.pair(l1, fp) - self.pair(l2, ep)
            coef = c * q_pow(ex) if ex else c
            lam = tuple(a + b + d for a, b, d in zip(l1, mu, l2))
            fr = self.reduce_f(f1 + fp)
            er = self.reduce_e(ep + e2)
            for fw, a in fr.items():
                ca = coef * a
                for ew, b in er.items():
                    _acc(res, (fw, lam, ew), ca * b)
        self._mono_mul[key] = res
        return res

    def from_raw(self, f, lam, e, coef=_ONE):
        """Normal form of the monomial F_f K_lam E_e with arbitrary words."""
        res = {}
        for fw, a in self.reduce_f(tuple(f)).items():
            for ew, b in self.reduce_e(tuple(e)).items():
                _acc(res, (fw, tuple(lam), ew), coef * a * b)
        return UqElement(self, res)


@lru_cache(maxsize=None)
def get_algebra(N, degree_bound=None):
    """Shared algebra instance per (N, bound); elements of distinct instances do not mix."""
    return _shared_algebra(N, 2 * N + 4 if degree_bound is None else degree_bound)


@lru_cache(maxsize=None)
def _shared_algebra(N, degree_bound):
    return UqAlgebra(N, degree_bound)


def _mono_key(m):
    f, lam, e = m
    return (len(f) + len(e), deglex_key(f), lam, deglex_key(e))


def render_monomial(m):
    f, lam, e = m
    parts = []
    if f:
        parts.append(render_word(f, "F"))
    if any(lam):
        parts.append("K[%s]" % ",".join(str(x) for x in lam))
    if e:
        parts.append(render_word(e, "E"))
    return "*".join(parts) if parts else "1"


class UqElement:
    """Element of U_q(sl_{N+1}) in normal form; immutable by convention."""

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg, terms):
        self.alg = alg
        clean = {}
        for m, c in terms.items():
            c = c if isinstance(c, Scalar) else Scalar(c)
            if c:
                clean[m] = c
        self.terms = clean
        self._hash = None

    def _lift(self, other):
        if isinstance(other, UqElement):
            if other.alg is not self.alg:
                raise ValueError("elements of different algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            _acc(t, m, c)
        return UqElement(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return UqElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar(c)
        if not c:
            return self.alg.zero()
        return UqElement(self.alg, {m: a * c for m, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UqElement):
            return self.scale(other)
        other = self._lift(other)
        alg = self.alg
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, d in alg.mono_mul(m1, m2).items():
                    _acc(res, m, c * d)
        return UqElement(alg, res)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UqElement):
            return self.alg is other.alg and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == self.alg.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def monomials(self):
        return sorted(self.terms, key=_mono_key)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%s" % (self.terms[m], render_monomial(m))
                          for m in self.monomials())

    __repr__ = __str__


def commutator(x, y, c=1):
    """x*y - c*y*x."""
    return x * y - (y * x).scale(c)


# -- expression parsing ---------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<gen>[EF])(?P<idx>\d+)"
                    r"|K\[(?P<lam>[-\d,\s]+)\]|(?P<ka>Ka)(?P<kidx>\d+)"
                    r"|(?P<sym>[qv])|(?P<op>[-+*.^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse expression near %r" % text[pos:pos + 10])
        pos = m.end()
        if m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("gen"):
            out.append((m.group("gen"), int(m.group("idx"))))
        elif m.group("lam") is not None:
            out.append(("K", tuple(int(x) for x in m.group("lam").split(","))))
        elif m.group("ka"):
            out.append(("Ka", int(m.group("kidx"))))
        elif m.group("sym"):
            out.append(("sym", m.group("sym")))
        else:
            out.append(("op", m.group("op")))
    return out


class _Parser:
    """
    Recursive-descent parser for sums of products of generators.

    Grammar: expr := term (('+'|'-') term)*, term := factor (('*'|'.') factor)*
    or juxtaposition, factor := atom ('^' ['-'] int)?.  Atoms are integers,
    q, v, E<i>, F<i>, K[m1,...,mN] (fundamental-weight coordinates) and
    Ka<i> for K_{alpha_i}.  Products are kept as letter sequences so the
    randomized engine can consume them unchanged.
    """

    def __init__(self, alg, tokens):
        self.alg = alg
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        if self.i >= len(self.toks):
            raise ValueError("unexpected end of expression")
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self):
        res = self.expr()
        if self.peek() is not None:
            raise ValueError("trailing tokens in expression")
        return res

    # a parsed value is a list of (Scalar, letters) with letters a tuple of
    # ('E', i) / ('F', i) / ('K', lam)
    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        out = [(c * sign, w) for c, w in self.term()]
        while self.peek() in (("op", "+"), ("op", "-")):
            s = 1 if self.take()[1] == "+" else -1
            out += [(c * s, w) for c, w in self.term()]
        return out

    def term(self):
        val = self.factor()
        while True:
            t = self.peek()
            if t in (("op", "*"), ("op", ".")):
                self.take()
            elif t is None or t[0] == "op" and t[1] in "+-)":
                return val
            rhs = self.factor()
            val = [(a * b, u + w) for a, u in val for b, w in rhs]

    def factor(self):
        val = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, n = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            n = -n if neg else n
            if n < 0:
                inv = self._invert(val)
                val, n = inv, -n
            out = [(_ONE, ())]
            for _ in range(n):
                out = [(a * b, u + w) for a, u in out for b, w in val]
            val = out
        return val

    def _invert(self, val):
        if len(val) != 1:
            raise ValueError("only scalars and K's may carry negative exponents")
        c, w = val[0]
        if any(x[0] != "K" for x in w):
            raise ValueError("only scalars and K's may carry negative exponents")
        lam = [0] * self.alg.N
        for _, l in w:
            lam = [a - b for a, b in zip(lam, l)]
        return [(c.inverse(), (("K", tuple(lam)),) if w else ())]

    def atom(self):
        t = self.take()
        kind, x = t
        if kind == "num":
            return [(Scalar(x), ())]
        if kind == "sym":
            return [(q_pow(1) if x == "q" else v_pow(1), ())]
        if kind in ("E", "F"):
            self.alg._check_index(x)
            return [(_ONE, ((kind, x),))]
        if kind == "K":
            if len(x) != self.alg.N:
                raise ValueError("K[...] needs %d coordinates" % self.alg.N)
            return [(_ONE, (("K", x),))]
        if kind == "Ka":
            self.alg._check_index(x)
            return [(_ONE, (("K", self.alg.alpha(x)),))]
        if t == ("op", "("):
            val = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return val
        raise ValueError("unexpected token %r" % (t,))


def _letters_to_element(alg, letters):
    out = alg.one()
    for kind, x in letters:
        if kind == "E":
            out = out * alg.E(x)
        elif kind == "F":
            out = out * alg.F(x)
        else:
            out = out * alg.K(x)
    return out


def parse_expression(alg, expr):
    """Parse ``expr`` into a list of (Scalar, letter tuple) summands."""
    if isinstance(expr, str):
        return _Parser(alg, _tokenize(expr)).parse()
    out = []
    for c, w in expr:
        out.append((Scalar(c) if not isinstance(c, Scalar) else c, tuple(w)))
    return out


def normal_form(alg, expr, rng=None):
    """
    Canonical form of a noncommutative expression.

    ``expr`` is a string (see :class:`_Parser`) or a list of
    ``(coefficient, letters)`` pairs.  With ``rng`` (a ``random.Random``) the
    independent randomized rewriting engine is used instead of the
    memoized product; both must agree.
    """
    summands = parse_expression(alg, expr)
    for _, w in summands:
        for side in ("E", "F"):
            n = sum(1 for x in w if x[0] == side)
            alg._check_len(n)
    if rng is None:
        res = alg.zero()
        for c, w in summands:
            res = res + _letters_to_element(alg, w).scale(c)
        return res
    return _random_rewrite(alg, summands, rng)


# -- randomized rewriting engine -----------------------------------------------

def _sites(alg, w):
    """All rewrite sites of a letter sequence."""
    sites = []
    n = len(w)
    for p in range(n - 1):
        a, b = w[p], w[p + 1]
        if a[0] == "E" and b[0] in ("F", "K") or a[0] == "K" and b[0] in ("F", "K"):
            sites.append(("swap", p))
    for side, sysm in (("E", alg.esys), ("F", alg.fsys)):
        p = 0
        while p < n:
            if w[p][0] != side:
                p += 1
                continue
            q = p
            while q < n and w[q][0] == side:
                q += 1
            run = tuple(x[1] for x in w[p:q])
            for L in sysm._lengths:
                for s in range(len(run) - L + 1):
                    if run[s:s + L] in sysm.rules:
                        sites.append(("rule", p + s, run[s:s + L], side))
            p = q
    return sites


def _apply_site(alg, w, site):
    """Rewrite one site; returns a list of (Scalar, new letters)."""
    if site[0] == "rule":
        _, p, lead, side = site
        pre, post = w[:p], w[p + len(lead):]
        rules = (alg.esys if side == "E" else alg.fsys).rules
        return [(c, pre + tuple((side, i) for i in t) + post)
                for t, c in rules[lead].items()]
    p = site[1]
    a, b = w[p], w[p + 1]
    pre, post = w[:p], w[p + 2:]
    if a[0] == "K" and b[0] == "K":
        lam = tuple(x + y for x, y in zip(a[1], b[1]))
        return [(_ONE, pre + (("K", lam),) + post)]
    if a[0] == "K":  # K_lam F_j = q^{-m_j} F_j K_lam
        return [(q_pow(-a[1][b[1] - 1]), pre + (b, a) + post)]
    if b[0] == "K":  # E_j K_lam = q^{-m_j} K_lam E_j
        return [(q_pow(-b[1][a[1] - 1]), pre + (b, a) + post)]
    out = [(_ONE, pre + (b, a) + post)]
    if a[1] == b[1]:
        qq = q_pow(1) - q_pow(-1)
        al = alg.alpha(a[1])
        out.append((qq.inverse(), pre + (("K", al),) + post))
        out.append((-qq.inverse(), pre + (("K", tuple(-x for x in al)),) + post))
    return out


def _random_rewrite(alg, summands, rng):
    pending = {}
    for c, w in summands:
        _acc(pending, tuple(w), c)
    done = {}
    while pending:
        w = rng.choice(sorted(pending, key=repr))
        c = pending.pop(w)
        sites = _sites(alg, w)
        if not sites:
            f = tuple(x[1] for x in w if x[0] == "F")
            e = tuple(x[1] for x in w if x[0] == "E")
            ks = [x[1] for x in w if x[0] == "K"]
            lam = ks[0] if ks else alg.zero_weight
            _acc(done, (f, lam, e), c)
            continue
        for d, nw in _apply_site(alg, w, rng.choice(sites)):
            _acc(pending, nw, c * d)
    return UqElement(alg, done)


# -- tensors and Hopf structure ----------------------------------------------

class Tensor:
    """Element of the k-fold tensor power, keyed by tuples of normal monomials."""

    __slots__ = ("alg", "legs", "terms")

    def __init__(self, alg, legs, terms):
        self.alg = alg
        self.legs = legs
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def from_elements(cls, *elems):
        alg = elems[0].alg
        terms = {(): _ONE}
        for x in elems:
            new = {}
            for k, c in terms.items():
                for m, d in x.terms.items():
                    _acc(new, k + (m,), c * d)
            terms = new
        return cls(alg, len(elems), terms)

    def __add__(self, other):
        if self.legs != other.legs:
            raise ValueError("tensor leg mismatch")
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return Tensor(self.alg, self.legs, t)

    def __neg__(self):
        return Tensor(self.alg, self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Tensor(self.alg, self.legs, {k: a * c for k, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            return self.scale(other)
        if self.legs != other.legs:
            raise ValueError("tensor leg mismatch")
        alg = self.alg
        res = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                parts = [{(): c1 * c2}]
                for m1, m2 in zip(k1, k2):
                    prod = alg.mono_mul(m1, m2)
                    parts = [{k + (m,): c * d for k, c in p.items() for m, d in prod.items()}
                             for p in parts]
                for p in parts:
                    for k, c in p.items():
                        _acc(res, k, c)
        return Tensor(alg, self.legs, res)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    def __hash__(self):
        return hash((self.legs, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def map_leg(self, i, fn):
        """Apply ``fn`` (monomial -> UqElement or Tensor) on leg i, splicing legs."""
        res = {}
        new_legs = None
        for k, c in self.terms.items():
            img = fn(k[i])
            if isinstance(img, UqElement):
                items = (((m,), d) for m, d in img.terms.items())
                width = 1
            else:
                items = img.terms.items()
                width = img.legs
            new_legs = self.legs - 1 + width
            for sub, d in items:
                _acc(res, k[:i] + tuple(sub) + k[i + 1:], c * d)
        if new_legs is None:
            new_legs = self.legs
        return Tensor(self.alg, new_legs, res)

    def multiply_legs(self):
        """Collapse all legs by multiplication, returning a UqElement."""
        out = {}
        for k, c in self.terms.items():
            acc = {((), self.alg.zero_weight, ()): c}
            for m in k:
                nxt = {}
                for a, x in acc.items():
                    for b, y in self.alg.mono_mul(a, m).items():
                        _acc(nxt, b, x * y)
                acc = nxt
            for m, x in acc.items():
                _acc(out, m, x)
        return UqElement(self.alg, out)

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: tuple(_mono_key(m) for m in k))
        return " + ".join("(%s)*%s" % (self.terms[k], " # ".join(render_monomial(m) for m in k))
                          for k in keys)

    __repr__ = __str__


TensorSquare = Tensor


def _generator_letters(m):
    f, lam, e = m
    return [("F", i) for i in f] + [("K", lam)] + [("E", i) for i in e]


def _delta_letter(alg, letter):
    kind, x = letter
    one = alg.one()
    if kind == "K":
        return Tensor.from_elements(alg.K(x), alg.K(x))
    if kind == "E":
        return Tensor.from_elements(alg.E(x), one) + Tensor.from_elements(alg.K_alpha(x), alg.E(x))
    return Tensor.from_elements(alg.F(x), alg.K_alpha(x, -1)) + Tensor.from_elements(one, alg.F(x))


def _delta_mono(alg, m):
    hit = alg._delta.get(m)
    if hit is not None:
        return hit
    f, lam, e = m
    if len(f) + len(e) <= 1:
        out = None
        for letter in _generator_letters(m):
            if letter == ("K", alg.zero_weight):
                continue
            d = _delta_letter(alg, letter)
            out = d if out is None else out * d
        if out is None:
            out = Tensor.from_elements(alg.one(), alg.one())
    elif e:
        out = _delta_mono(alg, (f, lam, e[:-1])) * _delta_letter(alg, ("E", e[-1]))
    else:
        out = _delta_letter(alg, ("F", f[0])) * _delta_mono(alg, (f[1:], lam, e))
    alg._delta[m] = out
    return out


def coproduct(x):
    """Algebra-morphism coproduct; a two-leg Tensor."""
    alg = x.alg
    res = Tensor(alg, 2, {})
    for m, c in x.terms.items():
        res = res + _delta_mono(alg, m).scale(c)
    return res


def _anti_extend(alg, m, cache, gen_image):
    # anti-multiplicative extension of per-letter images
    hit = cache.get(m)
    if hit is not None:
        return hit
    out = alg.one()
    for letter in reversed(_generator_letters(m)):
        if letter == ("K", alg.zero_weight):
            continue
        out = out * gen_image(letter)
    cache[m] = out
    return out


def _linear(x, fn):
    res = x.alg.zero()
    for m, c in x.terms.items():
        res = res + fn(m).scale(c)
    return res


def antipode(x):
    alg = x.alg

    def img(letter):
        kind, i = letter
        if kind == "K":
            return alg.K(tuple(-a for a in i))
        if kind == "E":
            return -(alg.K_alpha(i, -1) * alg.E(i))
        return -(alg.F(i) * alg.K_alpha(i))

    return _linear(x, lambda m: _anti_extend(alg, m, alg._anti, img))


def antipode_inv(x):
    alg = x.alg

    def img(letter):
        kind, i = letter
        if kind == "K":
            return alg.K(tuple(-a for a in i))
        if kind == "E":
            return -(alg.E(i) * alg.K_alpha(i, -1))
        return -(alg.K_alpha(i) * alg.F(i))

    return _linear(x, lambda m: _anti_extend(alg, m, alg._anti_inv, img))


def star(x):
    """Compact-form involution; conjugation on scalars is trivial."""
    alg = x.alg

    def img(letter):
        kind, i = letter
        if kind == "K":
            return alg.K(i)
        if kind == "E":
            return alg.K_alpha(i) * alg.F(i)
        return alg.E(i) * alg.K_alpha(i, -1)

    return _linear(x, lambda m: _anti_extend(alg, m, alg._star, img))


def counit(x):
    """Algebra morphism to scalars: K_lambda -> 1, E_i, F_i -> 0."""
    res = Scalar(0)
    for (f, _, e), c in x.terms.items():
        if not f and not e:
            res = res + c
    return res


def adjoint_action(a, y):
    """a |> y = a_(1) y S(a_(2))."""
    alg = a.alg
    res = alg.zero()
    for (m1, m2), c in coproduct(a).terms.items():
        left = UqElement(alg, {m1: c})
        res = res + left * y * antipode(UqElement(alg, {m2: _ONE}))
    return res


def weight(x):
    """Root-lattice grading in simple-root coordinates, or None if mixed or zero."""
    ws = set()
    for f, _, e in x.terms:
        w = [0] * x.alg.N
        for i in e:
            w[i - 1] += 1
        for i in f:
            w[i - 1] -= 1
        ws.add(tuple(w))
    return ws.pop() if len(ws) == 1 else None


def non_levi_monomials(x):
    N = x.alg.N
    return [m for m in x.monomials() if N in m[0] or N in m[2]]


def is_levi(x):
    N = x.alg.N
    return all(N not in f and N not in e for f, _, e in x.terms)


def equals_mod_levi(x, y):
    return is_levi(x - y)


def random_levi_element(alg, rng, max_letters=2):
    """Random element of the Levi subalgebra (used by property checks)."""
    res = alg.zero()
    for _ in range(rng.randint(1, 3)):
        term = alg.K(tuple(rng.randint(-1, 1) for _ in range(alg.N)))
        for _ in range(rng.randint(0, max_letters)):
            i = rng.randint(1, alg.N - 1)
            term = term * (alg.E(i) if rng.random() < 0.5 else alg.F(i))
        res = res + term.scale(rng.randint(-2, 2) or 1)
    return res


def random_letters(alg, rng, length):
    """Random generator letter sequence for confluence testing."""
    out = []
    for _ in range(length):
        r = rng.random()
        i = rng.randint(1, alg.N)
        if r < 0.4:
            out.append(("E", i))
        elif r < 0.8:
            out.append(("F", i))
        else:
            out.append(("K", tuple(rng.randint(-1, 1) for _ in range(alg.N))))
    return tuple(out)


__all__ += ["commutator", "render_monomial", "parse_expression", "TensorSquare",
            "non_levi_monomials", "random_levi_element", "random_letters"]
