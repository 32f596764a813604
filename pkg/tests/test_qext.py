import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qdolbeault.errors import NotLevi
from qdolbeault.qext import (ExtVector, ScalingProfile, TensorVector, antisymmetrize,
                             braid_relation_holds, braiding_eigenspaces, dual_relations,
                             hermitian, in_antisymmetric_tensors, levi_action, pairing,
                             project_pi, raw_pairing, rhat, rhat_dual, subsets, tensor_pairing,
                             wedge)
from qdolbeault.scalar import Scalar, q_factorial, q_pow, v_pow
from qdolbeault.uqalg import get_algebra

q, qi = q_pow(1), q_pow(-1)


def e(*I):
    return ExtVector.basis("+", tuple(I))


def f(*I):
    return ExtVector.basis("-", tuple(I))


def apply_rhat(N, t):
    img = rhat(N).apply(t.as_column(N))
    words = [(a + 1, b + 1) for a in range(N) for b in range(N)]
    return TensorVector("+", 2, {w: c for w, c in zip(words, img) if c})


def test_rhat_rules():
    assert apply_rhat(2, TensorVector("+", 2, {(1, 2): 1})) == \
        TensorVector("+", 2, {(2, 1): 1, (1, 2): q - qi})
    assert apply_rhat(2, TensorVector("+", 2, {(2, 1): 1})) == TensorVector("+", 2, {(1, 2): 1})
    for N in (2, 3, 4):
        for i in range(1, N + 1):
            assert apply_rhat(N, TensorVector("+", 2, {(i, i): 1})) == \
                TensorVector("+", 2, {(i, i): q})


@pytest.mark.parametrize("N", [2, 3, 4])
def test_braid_relation(N):
    assert braid_relation_holds(rhat(N), N)
    assert braid_relation_holds(rhat_dual(N), N)


@pytest.mark.parametrize("N,npos,nneg", [(2, 3, 1), (3, 6, 3), (4, 10, 6)])
def test_eigenspace_dimensions(N, npos, nneg):
    pos, neg = braiding_eigenspaces(N)
    assert (len(pos), len(neg)) == (npos, nneg)
    assert len(pos) + len(neg) == N * N


def test_negative_eigenvectors_rank3():
    _, neg = braiding_eigenspaces(3)
    expect = [TensorVector("+", 2, {(i, j): 1, (j, i): -q})
              for i, j in itertools.combinations(range(1, 4), 2)]
    assert neg == expect


def test_quadratic_duals_kill_antisymmetric_tensors():
    for N in (2, 3):
        duals = dual_relations(N)
        _, neg = braiding_eigenspaces(N)
        for d in duals:
            for t in neg:
                assert tensor_pairing(d, t) == 0


def test_wedge_relations():
    assert wedge(e(2), e(1)) == e(1, 2).scale(-q)
    assert wedge(e(1), e(1)).is_zero()
    assert wedge(f(1), f(2)) == f(1, 2).scale(-q)
    with pytest.raises(ValueError):
        wedge(e(1), f(1))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=3, max_size=3))
def test_wedge_associative(word):
    a, b, c = (e(i) for i in word)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_antisymmetrizer():
    assert antisymmetrize((2,)) == TensorVector("+", 1, {(2,): 1})
    assert antisymmetrize((1, 2)) == TensorVector("+", 2, {(1, 2): 1, (2, 1): -q})
    for N in (2, 3, 4):
        for I in subsets(N):
            k = len(I)
            img = project_pi(antisymmetrize(I))
            assert img == e(*I).scale(v_pow(k * (k - 1)) * q_factorial(k))
            assert in_antisymmetric_tensors(antisymmetrize(I), N)
            assert in_antisymmetric_tensors(antisymmetrize(I, "-"), N)


def test_projection_examples():
    assert project_pi(TensorVector("+", 2, {(1, 1): 1})).is_zero()
    assert project_pi(TensorVector("+", 2, {(2, 1): 1})) == e(1, 2).scale(-q)


def test_raw_pairing():
    assert raw_pairing(f(1, 2), e(1, 2)) == qi / q_factorial(2)
    assert raw_pairing(f(1, 2), e(1, 3)) == 0
    for k in range(4):
        for I in subsets(4, k):
            assert raw_pairing(f(*I), e(*I)) == v_pow(-k * (k - 1)) / q_factorial(k)
    with pytest.raises(ValueError):
        raw_pairing(f(1), e(1, 2))


def test_normalized_pairing_and_hermitian():
    prof = ScalingProfile([Scalar(3), q, Scalar(5)], [Scalar(7), Scalar(2), qi])
    assert pairing(f(), e(), prof) == 3
    assert pairing(f(1, 2), e(1, 2), prof) == 5
    assert pairing(f(1), e(2), prof) == 0
    assert hermitian(e(1), e(1), prof) == 2
    assert hermitian(e(1), e(2), prof) == 0
    assert hermitian(e(), e(), prof) == 7
    assert prof.c == [Scalar(9) / 7, q * q / 2, Scalar(25) * q]


def test_profile_from_c():
    prof = ScalingProfile.from_c([1, q, q * q])
    assert prof.c == [Scalar(1), q, q * q]
    with pytest.raises(ValueError):
        ScalingProfile([1, 0], [1, 1])


def test_levi_action_examples():
    a = get_algebra(2)
    for i in (1, 2):
        assert levi_action(a.K(a.omega(2)), e(i)) == e(i).scale(q)
    assert levi_action(a.F(1), e(1)) == e(2).scale(-v_pow(1))
    assert levi_action(a.E(1), e(1)).is_zero()
    with pytest.raises(NotLevi):
        levi_action(a.E(2), e(1))


def test_levi_action_is_a_representation():
    a = get_algebra(3)
    gens = [a.E(1), a.F(1), a.E(2), a.F(2), a.K((1, 0, 0)), a.K((0, -1, 2))]
    for x, y in itertools.product(gens, repeat=2):
        for I in subsets(3):
            assert levi_action(x * y, e(*I)) == levi_action(x, levi_action(y, e(*I)))
