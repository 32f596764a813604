import random
from itertools import permutations, product

import pytest

from qdolbeault.groebner import (gb_complete, irreducible_words, kostant_count, positive_roots,
                                 serre_relations)
from qdolbeault.linalg import rank_mod_p
from qdolbeault.scalar import Scalar


def test_rank2_leading_words():
    sys = gb_complete("E", 2, 3)
    assert {(2, 1, 1), (2, 2, 1)} <= set(sys.leading_words())


def test_rank1_has_no_rules():
    assert len(gb_complete("E", 1, 5)) == 0


def test_bound_must_be_at_least_three():
    with pytest.raises(ValueError):
        gb_complete("E", 2, 2)
    with pytest.raises(ValueError):
        gb_complete("X", 2, 4)


def test_rules_are_homogeneous_and_interreduced():
    for N in (2, 3):
        sys = gb_complete("E", N, 2 * N + 4)
        leads = sys.leading_words()
        for p in sys.rule_polynomials():
            assert p.is_homogeneous()
            ws = {tuple(sorted(w)) for w in p.terms}
            assert len(ws) == 1  # same letter multiset in every word
        for a in leads:
            for b in leads:
                if a != b:
                    assert not any(b == a[i:i + len(b)] for i in range(len(a) - len(b) + 1))


def test_f_side_shares_rules():
    e = gb_complete("E", 3, 6)
    f = gb_complete("F", 3, 6)
    assert f.side == "F" and e.rules is f.rules


def test_serre_relations_reduce_to_zero():
    for N in (2, 3):
        sys = gb_complete("E", N, 6)
        for rel in serre_relations("E", N):
            assert sys.reduce(rel).is_zero()


def test_reduction_is_idempotent():
    sys = gb_complete("E", 3, 6)
    rng = random.Random(0)
    for _ in range(30):
        w = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 6)))
        red = sys.reduce_word(w)
        assert all(sys.is_irreducible(u) for u in red)
        assert sys.reduce(red) == red


def test_positive_roots():
    assert positive_roots(2) == [(1, 0), (1, 1), (0, 1)]
    assert len(positive_roots(4)) == 10


def test_kostant_small_values():
    # sl_3: (1,1) = a1 + a2 or the root a1+a2
    assert kostant_count((1, 1)) == 2
    assert kostant_count((2, 1)) == 2
    assert kostant_count((1, 1, 1)) == 4
    assert kostant_count((0, 0)) == 1


def _words_of_weight(mu):
    letters = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    return sorted(set(permutations(letters)))


def _ideal_codim(N, mu):
    """Codimension of the ideal slice of weight mu by brute-force linear algebra."""
    words = _words_of_weight(mu)
    col = {w: k for k, w in enumerate(words)}
    rels = serre_relations("E", N)
    rows = []
    d = sum(mu)
    for r in rels:
        rd = len(next(iter(r.terms)))
        rw = [0] * N
        for i in next(iter(r.terms)):
            rw[i - 1] += 1
        rest = [a - b for a, b in zip(mu, rw)]
        if min(rest) < 0:
            continue
        for left_len in range(d - rd + 1):
            for u in product(range(1, N + 1), repeat=left_len):
                for w in product(range(1, N + 1), repeat=d - rd - left_len):
                    cnt = [0] * N
                    for i in u + w:
                        cnt[i - 1] += 1
                    if cnt != rest:
                        continue
                    row = [Scalar(0)] * len(words)
                    for word, c in r.terms.items():
                        row[col[u + word + w]] = row[col[u + word + w]] + c
                    rows.append(row)
    if not rows:
        return len(words)
    rank = max(rank_mod_p(rows, rng=random.Random(s)) for s in (1, 2))
    return len(words) - rank


@pytest.mark.parametrize("N,height", [(2, 6), (3, 5)])
def test_irreducible_counts_match_bruteforce_and_kostant(N, height):
    sys = gb_complete("E", N, 2 * N + 4)
    for d in range(height + 1):
        counts = {}
        for w in irreducible_words(sys, d):
            mu = tuple(w.count(i) for i in range(1, N + 1))
            counts[mu] = counts.get(mu, 0) + 1
        for mu in product(range(d + 1), repeat=N):
            if sum(mu) != d:
                continue
            got = counts.get(mu, 0)
            assert got == kostant_count(mu), mu
            assert got == _ideal_codim(N, mu), mu


def test_irreducible_counts_rank3_height6():
    sys = gb_complete("E", 3, 10)
    total = len(irreducible_words(sys, 6))
    want = sum(kostant_count(mu) for mu in product(range(7), repeat=3) if sum(mu) == 6)
    assert total == want
