"""Radical root vectors of sl_4 and the two orderings of their cross relation."""

from qdolbeault.rootvec import build_root_vectors, identity_holds, printed_cal_cross, root_vector_identities
from qdolbeault.uqalg import non_levi_monomials, render_monomial

rv = build_root_vectors(3)
for i in range(1, 4):
    print("E_xi%d =" % i, rv.E(i))
    print("  S^-1 image:", rv.cal(i))

# the ordering with the star on the left holds mod Levi; the transposed one does not
for ident in root_vector_identities(rv):
    if ident.name == "cal-cross[1,2]":
        print(ident.name, "holds:", identity_holds(ident))
for ident in printed_cal_cross(rv):
    if ident.name == "cal-cross-printed[1,2]":
        m = non_levi_monomials(ident.residual)[0]
        print(ident.name, "holds:", identity_holds(ident),
              "| leftover (%s)*%s" % (ident.residual.terms[m], render_monomial(m)))
