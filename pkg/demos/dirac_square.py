"""
Square of the Dolbeault-Dirac element: D^2 - C (x) T, entry by entry.

Run with an optional rank argument (2 or 3).
"""

import sys

from qdolbeault.dirac import TProfile, first_non_levi, main_theorem_residual, operator_T
from qdolbeault.qext import ScalingProfile

N = int(sys.argv[1]) if len(sys.argv) > 1 else 2

print("T on each degree, free ratio s = c1/c0:")
for k in range(N + 1):
    print("  k=%d:" % k, operator_T(k, 1, TProfile(N).c1))

for family in ("closed", "recurrence"):
    tp = TProfile(N, family=family)
    print("%s scalings c_k:" % family, [str(c) for c in tp.values()])
    R = main_theorem_residual(N, family=family)
    print("  residual Levi:", R.is_levi(), "| witness:", first_non_levi(R))

# equal constants are fine for both families
print("c0 = c1 = 1:", main_theorem_residual(N, c0=1, c1=1).is_levi())

# unit scalings everywhere break the condition on the c_k
R = main_theorem_residual(N, c0=1, c1=1, profile=ScalingProfile.normalized(N))
print("unit scalings witness:", first_non_levi(R))
