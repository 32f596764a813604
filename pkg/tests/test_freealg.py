import pytest
from hypothesis import given, strategies as st

from qdolbeault.freealg import Letter, NCPoly, deglex_compare, deglex_key, render_word
from qdolbeault.scalar import Scalar, q_pow

words = st.lists(st.integers(1, 3), max_size=5).map(tuple)


@given(words, words)
def test_deglex_is_total_and_antisymmetric(a, b):
    c = deglex_compare(a, b)
    assert c == -deglex_compare(b, a)
    assert (c == 0) == (a == b)


@given(words, words, words)
def test_deglex_is_multiplicative(u, a, b):
    c = deglex_compare(a, b)
    assert deglex_compare(u + a, u + b) == c
    assert deglex_compare(a + u, b + u) == c


@given(words, words, words)
def test_deglex_transitive(a, b, c):
    if deglex_compare(a, b) < 0 and deglex_compare(b, c) < 0:
        assert deglex_compare(a, c) < 0


def test_deglex_prefers_length_then_lex():
    assert deglex_key((2,)) < deglex_key((1, 1))
    assert deglex_compare((1, 2), (2, 1)) == -1


def test_render():
    assert render_word((1, 2, 1)) == "E1.E2.E1"
    assert render_word((3,), "F") == "F3"
    assert str(Letter("F", 2)) == "F2"
    with pytest.raises(ValueError):
        Letter("X", 1)


def test_ncpoly_arithmetic():
    e1 = NCPoly.letter("E", 1)
    e2 = NCPoly.letter("E", 2)
    p = e1 * e2 - e2 * e1
    assert p.leading_word() == (2, 1)
    assert p.leading_coefficient() == Scalar(-1)
    assert p.is_homogeneous()
    assert p.degree() == 2
    assert (p - p).is_zero()
    assert (p * q_pow(1)).terms[(1, 2)] == q_pow(1)
    assert p.monic().leading_coefficient() == Scalar(1)
    assert (e1 + e2 * e2).is_homogeneous() is False


def test_ncpoly_side_mismatch():
    with pytest.raises(ValueError):
        NCPoly("E", {(1,): 1}) + NCPoly("F", {(1,): 1})
    with pytest.raises(ValueError):
        NCPoly("K")
