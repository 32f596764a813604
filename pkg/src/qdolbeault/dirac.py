"""
The Dolbeault-Dirac element and its square.

A DiracElement is a 2^N x 2^N matrix with U_q entries, i.e. an element of
U_q(sl_{N+1}) (x) End(exterior algebra of u_+), with rows and columns indexed
by subsets.  Levi membership is tested entrywise.
"""

from .linalg import ScalarMatrix
from .qcliff import CliffOp, gamma_block, hermitian_adjoint
from .qext import ScalingProfile, subsets
from .rootvec import build_root_vectors
from .scalar import Scalar, param, q_pow, v_pow
from .uqalg import (adjoint_action, antipode_inv, counit, is_levi,
                    non_levi_monomials, render_monomial, star)

__all__ = [
    "DiracElement",
    "TProfile",
    "build_eth",
    "dirac",
    "square_decompose",
    "lemma_forms",
    "casimir_C",
    "casimir_C_tilde",
    "operator_T",
    "operator_T_tilde",
    "main_theorem_residual",
    "levi_commutant_report",
    "first_non_levi",
    "appendix_identities",
    "t_from_ratios",
    "profile_from_c",
]


class DiracElement:
    """Sparse matrix ``{(row subset, column subset): UqElement}``."""

    __slots__ = ("alg", "entries")

    def __init__(self, alg, entries=None):
        self.alg = alg
        self.entries = {k: x for k, x in (entries or {}).items() if not x.is_zero()}

    @property
    def N(self):
        return self.alg.N

    @classmethod
    def tensor(cls, a, op):
        """a (x) op for a UqElement a and a CliffOp op."""
        basis = subsets(op.N)
        out = {}
        for i, j, c in op.matrix.nonzero_entries():
            out[(basis[i], basis[j])] = a.scale(c)
        return cls(a.alg, out)

    def __add__(self, other):
        out = dict(self.entries)
        for k, x in other.entries.items():
            out[k] = out[k] + x if k in out else x
        return DiracElement(self.alg, out)

    def __neg__(self):
        return DiracElement(self.alg, {k: -x for k, x in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return DiracElement(self.alg, {k: x.scale(c) for k, x in self.entries.items()})

    def __mul__(self, other):
        if not isinstance(other, DiracElement):
            return self.scale(other)
        by_row = {}
        for (K, I), y in other.entries.items():
            by_row.setdefault(K, []).append((I, y))
        out = {}
        for (J, K), x in self.entries.items():
            for I, y in by_row.get(K, ()):
                p = x * y
                out[(J, I)] = out[(J, I)] + p if (J, I) in out else p
        return DiracElement(self.alg, out)

    def star(self, profile):
        """Entrywise star combined with the Hermitian adjoint of the Clifford leg."""
        lp = profile.lambda_primes
        out = {}
        for (J, I), x in self.entries.items():
            out[(I, J)] = star(x).scale(lp[len(J)] / lp[len(I)])
        return DiracElement(self.alg, out)

    def __eq__(self, other):
        if not isinstance(other, DiracElement):
            return NotImplemented
        return self.alg is other.alg and self.entries == other.entries

    def is_zero(self):
        return not self.entries

    def entry(self, J, I):
        return self.entries.get((tuple(J), tuple(I)), self.alg.zero())

    def non_levi_entries(self):
        return [(k, x) for k, x in sorted(self.entries.items(), key=_entry_key) if not is_levi(x)]

    def is_levi(self):
        return all(is_levi(x) for x in self.entries.values())

    def __str__(self):
        if not self.entries:
            return "0"
        return "\n".join("[%s,%s]: %s" % (_fmt(J), _fmt(I), x)
                         for (J, I), x in sorted(self.entries.items(), key=_entry_key))


def _entry_key(item):
    (J, I), _ = item
    return (len(J), J, len(I), I)


def _fmt(I):
    return "{" + ",".join(map(str, I)) + "}"


def first_non_levi(d):
    """A concrete witness (entry, monomial, coefficient) of a non-Levi entry, or None."""
    for (J, I), x in d.non_levi_entries():
        m = non_levi_monomials(x)[0]
        return "entry [%s,%s]: (%s)*%s" % (_fmt(J), _fmt(I), x.terms[m], render_monomial(m))
    return None


class TProfile:
    """
    Scaling constants c_0, ..., c_N determined by the free pair (c_0, c_1).

    ``family="closed"`` (default) uses c_k = (c_1^2/c_0) q^{-k(k-1)} for k >= 2.
    ``family="recurrence"`` solves c_{k+1} c_{k-1} = c_k^2 q^{-2} instead, giving
    c_k = c_0 (c_1/c_0)^k q^{-k(k-1)}; the two agree when c_0 = c_1 or N = 2.
    ``c1 = "symbolic"`` (the default) sets c_1 = s c_0 with s the adjoined parameter.
    """

    FAMILIES = ("closed", "recurrence")

    def __init__(self, N, c0=1, c1="symbolic", family="closed"):
        if family not in self.FAMILIES:
            raise ValueError("unknown family %r" % (family,))
        self.N = N
        self.family = family
        self.c0 = c0 if isinstance(c0, Scalar) else Scalar(c0)
        if isinstance(c1, str) and c1 == "symbolic":
            c1 = param() * self.c0
        self.c1 = c1 if isinstance(c1, Scalar) else Scalar(c1)
        if not self.c0 or not self.c1:
            raise ValueError("c0 and c1 must be nonzero")

    def c(self, k):
        if k == 0:
            return self.c0
        if k == 1:
            return self.c1
        if self.family == "recurrence":
            return self.c0 * self.ratio() ** k * q_pow(-k * (k - 1))
        return self.c1 * self.c1 / self.c0 * q_pow(-k * (k - 1))

    def values(self):
        return [self.c(k) for k in range(self.N + 1)]

    def scaling_profile(self):
        return ScalingProfile.from_c(self.values())

    def ratio(self):
        return self.c1 / self.c0

    def condition_residuals(self):
        """c_{k+1}/c_k - (c_k/c_{k-1}) q^{-2} for 1 <= k <= N-1."""
        c = self.values()
        return [c[k + 1] / c[k] - c[k] / c[k - 1] * q_pow(-2) for k in range(1, self.N)]


def profile_from_c(cs):
    return ScalingProfile.from_c(cs)


def _clifford_legs(N, profile):
    """The rescaled operators v^{-i} gamma_i and their adjoints."""
    legs = {}
    for i in range(1, N + 1):
        g = gamma_block(i, profile) * v_pow(-i)
        legs[i] = (g, hermitian_adjoint(g, profile))
    return legs


def build_eth(N, profile, degree_bound=None):
    """Sum over i of cal E_i (x) v^{-i} gamma_i."""
    rv = build_root_vectors(N, degree_bound)
    out = DiracElement(rv.alg)
    for i, (g, _) in _clifford_legs(N, profile).items():
        out = out + DiracElement.tensor(rv.cal(i), g)
    return out


def dirac(N, profile, degree_bound=None):
    eth = build_eth(N, profile, degree_bound)
    return eth + eth.star(profile)


def _pieces(N, profile, degree_bound=None):
    rv = build_root_vectors(N, degree_bound)
    legs = _clifford_legs(N, profile)
    eth = {i: DiracElement.tensor(rv.cal(i), legs[i][0]) for i in legs}
    eth_star = {i: x.star(profile) for i, x in eth.items()}
    return rv, legs, eth, eth_star


def square_decompose(N, profile, degree_bound=None):
    """
    Split D^2 by i = j versus i != j before contracting Clifford legs.

    Returns ``(D2, diagonal, off_diagonal, eth_sq, eth_star_sq)`` with
    D2 = diagonal + off_diagonal + eth_sq + eth_star_sq.
    """
    rv, legs, eth, eth_star = _pieces(N, profile, degree_bound)
    alg = rv.alg
    diag = DiracElement(alg)
    off = DiracElement(alg)
    for i in legs:
        for j in legs:
            part = eth[i] * eth_star[j] + eth_star[j] * eth[i]
            if i == j:
                diag = diag + part
            else:
                off = off + part
    e = DiracElement(alg)
    for i in legs:
        e = e + eth[i]
    es = e.star(profile)
    e2 = e * e
    d = e + es
    return d * d, diag, off, e2, es * es


def lemma_forms(N, profile, degree_bound=None):
    """The two displayed mod-Levi forms of the diagonal and off-diagonal parts."""
    rv, legs, _, _ = _pieces(N, profile, degree_bound)
    alg = rv.alg
    q, qi = q_pow(1), q_pow(-1)
    diag = DiracElement(alg)
    off = DiracElement(alg)
    for i, (gi, gis) in legs.items():
        op = gi * gis + (gis * gi) * q_pow(-2)
        for j in range(1, i):
            gj, gjs = legs[j]
            op = op - (gjs * gj) * (qi * (q - qi) * q_pow(j - i))
        diag = diag + DiracElement.tensor(rv.cal(i) * rv.cal_star(i), op)
        for j, (gj, gjs) in legs.items():
            if j != i:
                op = gi * gjs + (gjs * gi) * qi
                off = off + DiracElement.tensor(rv.cal(i) * rv.cal_star(j), op)
    return diag, off


def casimir_C(N, degree_bound=None):
    rv = build_root_vectors(N, degree_bound)
    out = rv.alg.zero()
    for i in range(1, N + 1):
        out = out + (rv.cal(i) * rv.cal_star(i)).scale(q_pow(-i))
    return out


def casimir_C_tilde(N, degree_bound=None):
    rv = build_root_vectors(N, degree_bound)
    out = rv.alg.zero()
    for i in range(1, N + 1):
        out = out + (rv.E_star(i) * rv.E(i)).scale(q_pow(-3 * i))
    return out


def operator_T(k, c0, c1):
    c0 = c0 if isinstance(c0, Scalar) else Scalar(c0)
    c1 = c1 if isinstance(c1, Scalar) else Scalar(c1)
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k <= 2:
        return c1 / c0 * q_pow(-2 * k)
    return q_pow(-2 * k)


def operator_T_tilde(k, c0, c1):
    return q_pow(2 * k) * operator_T(k, c0, c1)


def t_from_ratios(profile, k):
    """T on degree k in the unsimplified form c1/c0 (k = 0), c_k/c_{k-1} q^{-2} (k > 0)."""
    c = profile.c
    if k == 0:
        return c[1] / c[0]
    return c[k] / c[k - 1] * q_pow(-2)


def _diag_tensor(x, N, fn):
    basis = subsets(N)
    n = len(basis)
    data = [[fn(len(basis[i])) if i == j else Scalar(0) for j in range(n)] for i in range(n)]
    return DiracElement.tensor(x, CliffOp(N, ScalarMatrix(data, n)))


def main_theorem_residual(N, c0=1, c1="symbolic", degree_bound=None, profile=None,
                          family="closed"):
    """
    D^2 - C (x) T.

    For the closed family T is the piecewise operator_T; for the recurrence
    family it is read off the ratios (which is (c_1/c_0) q^{-2k} on degree k).
    Passing ``profile`` overrides the Clifford scalings only, which is how the
    all-ones negative control is run.
    """
    tp = TProfile(N, c0, c1, family)
    prof = profile or tp.scaling_profile()
    D = dirac(N, prof, degree_bound)
    C = casimir_C(N, degree_bound)
    if family == "closed":
        t = lambda k: operator_T(k, tp.c0, tp.c1)
    else:
        t = lambda k: t_from_ratios(tp.scaling_profile(), k)
    return D * D - _diag_tensor(C, N, t)


def levi_commutant_report(x, sample_weights=None):
    """
    For each Levi generator g, the element g |> x - eps(g) x.

    Returns a list of ``(generator name, residual)`` pairs; the adjoint
    action of every generator is trivial exactly when all residuals vanish.
    """
    alg = x.alg
    N = alg.N
    gens = []
    for j in range(1, N):
        gens.append(("E%d" % j, alg.E(j)))
        gens.append(("F%d" % j, alg.F(j)))
    for lam in sample_weights or [alg.omega(k) for k in range(1, N + 1)]:
        gens.append(("K[%s]" % ",".join(map(str, lam)), alg.K(lam)))
    out = []
    for name, g in gens:
        out.append((name, adjoint_action(g, x) - x.scale(counit(g))))
    return out


def appendix_identities(N, degree_bound=None):
    """
    Sub-identities of the Levi-invariance argument for C-tilde.

    Yields ``(label, residual)``; every residual must vanish exactly.
    """
    rv = build_root_vectors(N, degree_bound)
    alg = rv.alg
    q = q_pow(1)
    zero = alg.zero()
    for i in range(1, N + 1):
        x = rv.E_star(i) * rv.E(i)
        for j in range(1, N):
            expect = zero
            if j == i and i < N:
                expect = expect + (rv.E_star(i + 1) * rv.E(i)).scale(q_pow(-2))
            if j == i - 1:
                expect = expect - (rv.E_star(i) * rv.E(i - 1)).scale(q)
            yield ("E%d |> E*E[%d]" % (j, i), adjoint_action(alg.E(j), x) - expect)
    for i in range(2, N + 1):
        k = alg.K_alpha(i - 1, -1)
        yield ("K%d^-1 |> E_xi[%d]" % (i - 1, i), adjoint_action(k, rv.E(i)) - rv.E(i).scale(q))
    C = casimir_C(N, degree_bound)
    yield ("S^-1(C~) = q^{-2(N+1)} C",
           antipode_inv(casimir_C_tilde(N, degree_bound)) - C.scale(q_pow(-2 * (N + 1))))

