"""
Truncated noncommutative Buchberger completion for the one-sided Serre ideals.

Both halves of U_q(sl_{N+1}) have the same relations in their own letters, so
a single completed system per (N, bound) serves the E-side and the F-side.
The ideal is homogeneous, which is what makes truncation at a degree bound
sound: every word of degree <= bound has the same normal form it would have
under the full (possibly infinite) basis.
"""

import itertools
from functools import lru_cache

from .freealg import NCPoly, deglex_key
from .scalar import Scalar, q_num

__all__ = [
    "RewriteSystem",
    "serre_relations",
    "gb_complete",
    "positive_roots",
    "kostant_count",
    "irreducible_words",
]


def serre_relations(side, N):
    """Serre relations of the rank-N (type A_N) positive or negative part."""
    rels = []
    two = q_num(2)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if j - i > 1:
                rels.append(NCPoly(side, {(i, j): 1, (j, i): -1}))
            else:
                for a, b in ((i, j), (j, i)):
                    rels.append(NCPoly(side, {(a, a, b): 1, (a, b, a): -two, (b, a, a): 1}))
    return rels


class RewriteSystem:
    """
    Interreduced rules ``lead -> tail`` with ``lead - tail`` in the ideal.

    Rules are stored as ``{lead_word: {word: Scalar}}``; words are index tuples.
    The same rules apply to either alphabet, ``side`` only tags the instance.
    """

    def __init__(self, side, N, degree_bound, rules):
        self.side = side
        self.N = N
        self.degree_bound = degree_bound
        self.rules = rules
        self._lengths = sorted({len(w) for w in rules})
        self._cache = {}

    def with_side(self, side):
        if side == self.side:
            return self
        other = RewriteSystem(side, self.N, self.degree_bound, self.rules)
        other._cache = self._cache
        return other

    def __len__(self):
        return len(self.rules)

    def leading_words(self):
        return sorted(self.rules, key=deglex_key)

    def rule_polynomials(self):
        """Each rule as the ideal element lead - tail."""
        out = []
        for lead in self.leading_words():
            t = {lead: Scalar(1)}
            for w, c in self.rules[lead].items():
                t[w] = -c
            out.append(NCPoly(self.side, t))
        return out

    def find(self, word):
        """Leftmost occurrence ``(position, lead)`` of a leading word, or None."""
        n = len(word)
        for pos in range(n):
            for L in self._lengths:
                if pos + L > n:
                    break
                sub = word[pos:pos + L]
                if sub in self.rules:
                    return pos, sub
        return None

    def _find_suffix(self, word):
        n = len(word)
        for L in self._lengths:
            if L > n:
                break
            sub = word[n - L:]
            if sub in self.rules:
                return n - L, sub
        return None

    def is_irreducible(self, word):
        return self.find(tuple(word)) is None

    def reduce_word(self, word):
        """Normal form of a single word, as ``{word: Scalar}``."""
        word = tuple(word)
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        if len(word) <= 1 or not self._lengths:
            res = {word: Scalar(1)}
        else:
            res = {}
            for u, c in self.reduce_word(word[:-1]).items():
                for w, d in self._reduce_irreducible_times(u + word[-1:]).items():
                    e = c * d
                    if w in res:
                        e = res[w] + e
                        if e:
                            res[w] = e
                        else:
                            del res[w]
                    else:
                        res[w] = e
        self._cache[word] = res
        return res

    def _reduce_irreducible_times(self, word):
        # word = (irreducible prefix) + one letter: only suffixes can match
        hit = self._find_suffix(word)
        if hit is None:
            return {word: Scalar(1)}
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        pos, lead = hit
        head = word[:pos]
        res = {}
        for w, c in self.rules[lead].items():
            for x, d in self.reduce_word(head + w).items():
                e = c * d
                if x in res:
                    e = res[x] + e
                    if e:
                        res[x] = e
                    else:
                        del res[x]
                else:
                    res[x] = e
        self._cache[word] = res
        return res

    def reduce(self, poly):
        """Normal form of an NCPoly (or a ``{word: Scalar}`` dict)."""
        terms = poly.terms if isinstance(poly, NCPoly) else poly
        res = {}
        for w, c in terms.items():
            for x, d in self.reduce_word(w).items():
                e = c * d
                if x in res:
                    e = res[x] + e
                    if e:
                        res[x] = e
                    else:
                        del res[x]
                else:
                    res[x] = e
        if isinstance(poly, NCPoly):
            return NCPoly(poly.side, res)
        return res


def _reduce_full(rules, lengths, terms):
    # deglex-largest reducible word first; used during completion where
    # rules are still changing, so nothing is memoized here
    terms = dict(terms)
    while True:
        target = None
        for w in sorted(terms, key=deglex_key, reverse=True):
            hit = _find_in(rules, lengths, w)
            if hit is not None:
                target = (w, hit)
                break
        if target is None:
            return terms
        w, (pos, lead) = target
        c = terms.pop(w)
        a, b = w[:pos], w[pos + len(lead):]
        for t, d in rules[lead].items():
            x = a + t + b
            e = c * d
            if x in terms:
                e = terms[x] + e
                if e:
                    terms[x] = e
                else:
                    del terms[x]
            else:
                terms[x] = e


def _find_in(rules, lengths, word):
    n = len(word)
    for pos in range(n):
        for L in lengths:
            if pos + L > n:
                break
            if word[pos:pos + L] in rules:
                return pos, word[pos:pos + L]
    return None


def _as_rule(terms):
    lead = max(terms, key=deglex_key)
    inv = terms[lead].inverse()
    return lead, {w: -c * inv for w, c in terms.items() if w != lead}


def _overlaps(u, w, bound):
    """Words u + w[k:] where a proper suffix of u equals a prefix of w."""
    out = []
    for k in range(1, min(len(u), len(w))):
        if u[len(u) - k:] == w[:k] and len(u) + len(w) - k <= bound:
            out.append(k)
    return out


def _spoly(rules, u, w, k):
    # (u - tail_u) * w[k:] - u[:-k] * (w - tail_w); the overlap word cancels
    right = w[k:]
    left = u[:len(u) - k]
    terms = {}
    for t, c in rules[u].items():
        x = t + right
        terms[x] = terms.get(x, Scalar(0)) - c
    for t, c in rules[w].items():
        x = left + t
        terms[x] = terms.get(x, Scalar(0)) + c
    return {x: c for x, c in terms.items() if c}


@lru_cache(maxsize=None)
def _complete(N, degree_bound):
    rules = {}
    for rel in serre_relations("E", N):
        lead, tail = _as_rule(rel.terms)
        rules[lead] = tail
    if not rules:
        return rules
    done = set()
    for d in range(3, degree_bound + 1):
        # every ambiguity whose overlap word has degree d, across current rules;
        # new degree-d rules cannot create degree-d overlaps with each other
        # beyond those enumerated in the loop below, so iterate to a fixpoint
        while True:
            lengths = sorted({len(x) for x in rules})
            new = []
            for u, w in itertools.product(sorted(rules, key=deglex_key), repeat=2):
                for k in _overlaps(u, w, d):
                    if len(u) + len(w) - k != d or (u, w, k) in done:
                        continue
                    done.add((u, w, k))
                    r = _reduce_full(rules, lengths, _spoly(rules, u, w, k))
                    if r:
                        lead, tail = _as_rule(r)
                        rules[lead] = tail
                        lengths = sorted({len(x) for x in rules})
                        new.append(lead)
            if not new:
                break
    # interreduce tails against the final rule set
    lengths = sorted({len(x) for x in rules})
    for lead in list(rules):
        rules[lead] = _reduce_full(rules, lengths, rules[lead])
    return rules


@lru_cache(maxsize=None)
def gb_complete(side, N, degree_bound):
    """Completed, interreduced rewrite system for the Serre ideal of rank N."""
    if degree_bound < 3:
        raise ValueError("degree_bound must be at least 3")
    if side not in ("E", "F"):
        raise ValueError("side must be 'E' or 'F'")
    if side == "F":
        return gb_complete("E", N, degree_bound).with_side("F")
    return RewriteSystem(side, N, degree_bound, _complete(N, degree_bound))


def irreducible_words(system, degree):
    """All words of the given length that no rule can rewrite."""
    out = [()]
    for _ in range(degree):
        out = [w + (i,) for w in out for i in range(1, system.N + 1)
               if system._find_suffix(w + (i,)) is None]
    return out


def positive_roots(N):
    """Positive roots of sl_{N+1} as simple-root coordinate tuples."""
    roots = []
    for i in range(N):
        for j in range(i, N):
            roots.append(tuple(1 if i <= k <= j else 0 for k in range(N)))
    return roots


@lru_cache(maxsize=None)
def _partitions(target, roots):
    if not any(target):
        return 1
    if not roots:
        return 0
    first, rest = roots[0], roots[1:]
    total = 0
    t = target
    while all(x >= 0 for x in t):
        total += _partitions(t, rest)
        t = tuple(a - b for a, b in zip(t, first))
    return total


def kostant_count(mu):
    """Number of ways to write mu as a sum of positive roots (Kostant partitions)."""
    mu = tuple(mu)
    return _partitions(mu, tuple(positive_roots(len(mu))))
