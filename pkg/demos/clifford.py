"""Quantum interior and exterior multiplication on the exterior algebra of C^2."""

from qdolbeault.qcliff import CliffOp, exterior, interior
from qdolbeault.qext import ExtVector, subsets
from qdolbeault.scalar import q_pow

N = 2
q, qi = q_pow(1), q_pow(-1)
print("basis:", subsets(N))
for a in (1, 2):
    print("interior %d:\n%s" % (a, interior(a, N)))
    print("exterior %d:\n%s" % (a, exterior(a, N)))

e12 = ExtVector.basis("+", (1, 2))
print("interior 2 on e12:", interior(2, N).apply(e12))

lhs = exterior(2, N) * interior(2, N) + interior(2, N) * exterior(2, N)
lhs = lhs - (exterior(1, N) * interior(1, N)) * (q * (q - qi))
print("quadratic relation for index 2 gives identity:", lhs == CliffOp.identity(N))
classical = (exterior(1, N) * interior(1, N) + interior(1, N) * exterior(1, N)).specialize(1)
print("at v = 1, e1 i1 + i1 e1 =", [[str(x) for x in row] for row in classical])
