import itertools
from fractions import Fraction

import pytest

from qdolbeault.qcliff import (CliffOp, degree_projector, exterior, gamma, gamma_star,
                               gamma_star_block, hermitian_adjoint, interior, spanning_rank)
from qdolbeault.qext import ExtVector, ScalingProfile, hermitian, subsets
from qdolbeault.scalar import param, q_pow, v_pow

q, qi = q_pow(1), q_pow(-1)


def e(*I):
    return ExtVector.basis("+", tuple(I))


def test_interior_examples():
    assert interior(2, 2).apply(e(1, 2)) == e(1).scale(-q)
    assert interior(1, 2).apply(e(1, 2)) == e(2)
    assert interior(3, 3).apply(e(1, 2)).is_zero()
    with pytest.raises(ValueError):
        interior(3, 2)


def test_exterior_examples():
    assert exterior(1, 2).apply(e(2)) == e(1, 2)
    assert exterior(2, 2).apply(e(1)) == e(1, 2).scale(-q)
    assert exterior(1, 2).apply(e(1)).is_zero()


@pytest.mark.parametrize("N", [2, 3, 4])
def test_cross_relations(N):
    for i, j in itertools.permutations(range(1, N + 1), 2):
        assert exterior(i, N) * interior(j, N) == (interior(j, N) * exterior(i, N)) * (-qi)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_quadratic_constant(N):
    for i in range(1, N + 1):
        acc = exterior(i, N) * interior(i, N) + interior(i, N) * exterior(i, N)
        for j in range(1, i):
            acc = acc - (exterior(j, N) * interior(j, N)) * (q * (q - qi))
        assert acc == CliffOp.identity(N)


@pytest.mark.parametrize("N", [2, 3])
def test_classical_limit(N):
    n = 2 ** N
    ident = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    zero = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            op = exterior(i, N) * interior(j, N) + interior(j, N) * exterior(i, N)
            assert op.specialize(1) == (ident if i == j else zero)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_gradedness(N):
    for a in range(1, N + 1):
        assert interior(a, N).degree_shift() == -1
        assert exterior(a, N).degree_shift() == 1


@pytest.mark.parametrize("N", [2, 3])
def test_products_span_all_endomorphisms(N):
    assert spanning_rank(N) == 4 ** N


def test_unit_profile_gamma_is_interior():
    prof = ScalingProfile.normalized(3)
    for i in range(1, 4):
        total = CliffOp.zero(3)
        for k in range(1, 4):
            total = total + gamma(i, prof, k)
        assert total == interior(i, 3)
        assert gamma_star_block(i, prof) == exterior(i, 3)


def test_gamma_with_symbolic_ratio():
    s = param()
    prof = ScalingProfile.from_c([1, s, s * s * q_pow(-2)])
    on_empty = gamma(1, prof, 1) * gamma_star(1, prof, 0)
    assert on_empty.apply(e()) == e().scale(s)
    assert (gamma_star(2, prof, 0) * gamma(2, prof, 1)).apply(e(2)) == e(2).scale(s)


def test_gamma_degree_range():
    prof = ScalingProfile.normalized(2)
    with pytest.raises(ValueError):
        gamma(1, prof, 0)
    with pytest.raises(ValueError):
        gamma_star(1, prof, 2)


def test_hermitian_adjoint_defining_property():
    s = param()
    prof = ScalingProfile([1, v_pow(1), 3, s], [2, s, q, 5])
    N = 3
    for a in range(1, N + 1):
        op = interior(a, N) * v_pow(a)
        adj = hermitian_adjoint(op, prof)
        assert hermitian_adjoint(adj, prof) == op
        for I, J in itertools.product(subsets(N), repeat=2):
            if len(I) != len(J) - 1:
                continue
            assert hermitian(e(*I), op.apply(e(*J)), prof) == hermitian(adj.apply(e(*I)), e(*J), prof)


def test_degree_projectors_sum_to_identity():
    total = CliffOp.zero(3)
    for k in range(4):
        total = total + degree_projector(3, k)
    assert total == CliffOp.identity(3)
    assert degree_projector(3, 2) * degree_projector(3, 2) == degree_projector(3, 2)
