"""
The verification suite behind the command line.

Every check is a named, ordered entry with a formula label as its anchor.
A check returns ``(ok, witness)``; a failing check always carries a witness
naming a concrete offending entry, monomial or value.
"""

import json
import logging
import random
import time
from collections import namedtuple
from fractions import Fraction
from itertools import permutations, product

from . import __version__
from .dirac import (TProfile, appendix_identities, casimir_C, casimir_C_tilde, first_non_levi,
                    lemma_forms, main_theorem_residual, operator_T, operator_T_tilde,
                    square_decompose, t_from_ratios, levi_commutant_report, dirac)
from .errors import ConfigurationError, DegreeBoundExceeded
from .freealg import deglex_compare
from .linalg import ScalarMatrix
from .groebner import gb_complete, irreducible_words, kostant_count
from .qcliff import (CliffOp, degree_projector, exterior, gamma, gamma_star, hermitian_adjoint,
                     interior, spanning_rank)
from .qext import (ExtVector, ScalingProfile, antisymmetrize, braid_relation_holds,
                   braiding_eigenspaces, dual_relations, eigen_residuals, in_antisymmetric_tensors,
                   levi_action, project_pi, raw_pairing, rhat, rhat_dual, subsets, tensor_pairing)
from .rootvec import (build_root_vectors, identity_holds, printed_cal_cross,
                      root_vector_identities, transport_checks, _chain)
from .scalar import Scalar, param, q_factorial, q_pow, v_pow
from .uqalg import (Tensor, antipode, antipode_inv, coproduct, counit, get_algebra,
                    _letters_to_element, non_levi_monomials, normal_form, random_letters,
                    render_monomial, star, weight, UqElement)

__all__ = ["CheckConfig", "Record", "Report", "CHECKS", "run_checks", "emit_report",
           "parse_scalar_literal"]

log = logging.getLogger("qdolbeault")

Record = namedtuple("Record", "check_id paper_anchor status witness millis")

PROFILES = ("closed", "recurrence", "all-ones")


class CheckConfig:
    """
    Run configuration.  ``c0``/``c1`` are Scalars or the token "symbolic".

    ``profile`` picks the Clifford scaling constants: the closed-form family,
    the recurrence-solved family, or c_k = 1 for all k.
    """

    def __init__(self, N=2, degree_bound=None, c0=1, c1=1, checks=None, output_format="text",
                 profile="closed", extended=False, timings=False):
        self.N = N
        self.degree_bound = 2 * N + 4 if degree_bound is None else degree_bound
        self.c0 = c0
        self.c1 = c1
        self.checks = list(checks) if checks else None
        self.output_format = output_format
        self.profile = profile
        self.extended = extended
        self.timings = timings

    def validate(self):
        if not isinstance(self.N, int) or not 2 <= self.N <= 4:
            raise ConfigurationError("rank N=%r is outside the supported range 2..4" % (self.N,))
        if self.N == 4 and not self.extended:
            raise ConfigurationError("rank 4 checks are opt-in; pass --extended")
        if self.degree_bound < 3:
            raise ConfigurationError(
                "degree bound %d is too small; the minimal sufficient bound is at least 3"
                % self.degree_bound)
        if self.profile not in PROFILES:
            raise ConfigurationError("unknown profile %r" % (self.profile,))
        if self.output_format not in ("text", "json"):
            raise ConfigurationError("unknown format %r" % (self.output_format,))
        if isinstance(self.c0, str):
            raise ConfigurationError("only c1 may be symbolic; c0 fixes the scale")
        if not self.c0 or not self.c1:
            raise ConfigurationError("c0 and c1 must be nonzero")
        if self.checks:
            known = [c.check_id for c in CHECKS]
            for pat in self.checks:
                if not any(_selected(cid, [pat]) for cid in known):
                    raise ConfigurationError("no check matches %r" % (pat,))

    def describe(self):
        return {
            "N": self.N,
            "degree_bound": self.degree_bound,
            "c0": str(self.c0),
            "c1": str(self.c1),
            "profile": self.profile,
            "checks": self.checks,
        }


class Report:
    def __init__(self, config=None, records=()):
        self.config = config
        self.records = list(records)

    @property
    def failed(self):
        return [r for r in self.records if r.status == "fail"]

    def ok(self):
        return not self.failed


def parse_scalar_literal(text):
    """
    Parse a rational-function literal in v, e.g. "1", "3/2", "v^2+1", "(v-1)/(v^3)".

    The token "symbolic" is passed through unchanged.
    """
    text = text.strip()
    if text == "symbolic":
        return text
    try:
        return Scalar(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    tokens = _lex_scalar(text)
    pos, val = _ScalarParser(tokens).parse()
    if pos != len(tokens):
        raise ConfigurationError("trailing input in scalar literal %r" % text)
    return val


def _lex_scalar(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(int(text[i:j]))
            i = j
        elif ch in "v+-*/^()":
            out.append(ch)
            i += 1
        else:
            raise ConfigurationError("unexpected character %r in scalar literal" % ch)
    return out


class _ScalarParser:
    def __init__(self, tokens):
        self.t = tokens
        self.i = 0

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        val = self.expr()
        return self.i, val

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        val = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.power()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                rhs = self.power()
                if tok == "/":
                    if not rhs:
                        raise ConfigurationError("division by zero in scalar literal")
                    val = val / rhs
                else:
                    val = val * rhs
            elif tok == "v" or tok == "(" or isinstance(tok, int):
                val = val * self.power()
            else:
                return val

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            exp = self.take()
            if not isinstance(exp, int):
                raise ConfigurationError("exponent must be an integer")
            if neg and not base:
                raise ConfigurationError("zero to a negative power")
            base = base ** (-exp if neg else exp)
        return base

    def atom(self):
        tok = self.take()
        if tok == "v":
            return v_pow(1)
        if isinstance(tok, int):
            return Scalar(tok)
        if tok == "(":
            val = self.expr()
            if self.take() != ")":
                raise ConfigurationError("unbalanced parentheses in scalar literal")
            return val
        raise ConfigurationError("unexpected token %r in scalar literal" % (tok,))


# -- witnesses ------------------------------------------------------------------

def _uq_witness(x, levi=False):
    if levi:
        bad = non_levi_monomials(x)
        if not bad:
            return None
        m = bad[0]
    else:
        if x.is_zero():
            return None
        m = x.monomials()[0]
    return "(%s)*%s" % (x.terms[m], render_monomial(m))


def _matrix_witness(op):
    entries = op.matrix.nonzero_entries()
    if not entries:
        return None
    basis = subsets(op.N)
    i, j, c = entries[0]
    return "entry [%s,%s] = %s" % (_fmt(basis[i]), _fmt(basis[j]), c)


def _fmt(I):
    return "{" + ",".join(map(str, I)) + "}"


def _first(items):
    """First (label, witness) among failures, as an outcome."""
    for label, w in items:
        if w is not None:
            return False, "%s: %s" % (label, w)
    return True, None


# -- context ------------------------------------------------------------------

class _Context:
    def __init__(self, config, degree_bound):
        self.config = config
        self.N = config.N
        self.bound = degree_bound
        self._cache = {}

    def get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def alg(self):
        return self.get("alg", lambda: get_algebra(self.N, self.bound))

    @property
    def rv(self):
        return self.get("rv", lambda: build_root_vectors(self.N, self.bound))

    def c_pair(self):
        cfg = self.config
        c0 = cfg.c0 if isinstance(cfg.c0, Scalar) else Scalar(cfg.c0)
        c1 = param() * c0 if cfg.c1 == "symbolic" else cfg.c1
        return c0, c1 if isinstance(c1, Scalar) else Scalar(c1)

    @property
    def tprofile(self):
        fam = "recurrence" if self.config.profile == "recurrence" else "closed"
        c0, c1 = self.c_pair()
        return self.get("tp", lambda: TProfile(self.N, c0, c1, fam))

    @property
    def scaling(self):
        if self.config.profile == "all-ones":
            return self.get("ones", lambda: ScalingProfile.from_c([Scalar(1)] * (self.N + 1)))
        return self.get("scaling", lambda: self.tprofile.scaling_profile())

    @property
    def square(self):
        return self.get("square", lambda: square_decompose(self.N, self.scaling, self.bound))


# -- individual checks ----------------------------------------------------------

Check = namedtuple("Check", "check_id paper_anchor run")
CHECKS = []


def check(check_id, anchor):
    def deco(fn):
        CHECKS.append(Check(check_id, anchor, fn))
        return fn
    return deco


def _sample_scalars(rng, n):
    v = v_pow(1)
    out = []
    for _ in range(n):
        num = sum((Scalar(rng.randint(-3, 3)) * v ** k for k in range(3)), Scalar(0))
        den = sum((Scalar(rng.randint(-3, 3)) * v ** k for k in range(3)), Scalar(0))
        if den.is_zero():
            den = Scalar(1)
        out.append(num / den * v_pow(rng.randint(-2, 2)))
    return out


@check("scalar.field-axioms", "Q(v) field arithmetic")
def _scalar_field(ctx):
    xs = _sample_scalars(random.Random(1), 8)
    for a, b, c in product(xs[:4], xs[2:6], xs[4:8]):
        if (a + b) * c != a * c + b * c or (a * b) * c != a * (b * c):
            return False, "a=%s b=%s c=%s" % (a, b, c)
    for a in xs:
        if a and a * a.inverse() != Scalar(1):
            return False, "a * a^-1 != 1 for a=%s" % a
    return True, None


@check("scalar.q-factorial", "sum over S_k of q^{inv} = q^{k(k-1)/2} [k]!")
def _scalar_qfact(ctx):
    for k in range(ctx.N + 2):
        total = Scalar(0)
        for p in permutations(range(k)):
            inv = sum(1 for a in range(k) for b in range(a + 1, k) if p[a] > p[b])
            total = total + q_pow(inv)
        want = v_pow(k * (k - 1) // 2) * _factorial_in_v(k)
        if total != want:
            return False, "k=%d: %s vs %s" % (k, total, want)
    return True, None


def _factorial_in_v(k):
    # [k]! in the variable v = q^{1/2} with the balanced convention
    out = Scalar(1)
    for n in range(1, k + 1):
        out = out * (v_pow(n) - v_pow(-n)) / (v_pow(1) - v_pow(-1))
    return out


@check("freealg.deglex", "deglex monomial order")
def _freealg_deglex(ctx):
    rng = random.Random(2)
    words = [tuple(rng.randint(1, ctx.N) for _ in range(rng.randint(0, 4))) for _ in range(30)]
    for a, b in product(words, repeat=2):
        ab = deglex_compare(a, b)
        if ab != -deglex_compare(b, a) or (ab == 0) != (a == b):
            return False, "inconsistent comparison %s vs %s" % (a, b)
        for u in words[:5]:
            if ab and deglex_compare(u + a, u + b) != ab or ab and deglex_compare(a + u, b + u) != ab:
                return False, "not multiplicative at %s, %s, %s" % (u, a, b)
    return True, None


@check("uqalg.defining-relations", "K_i E_j K_i^{-1} = q^{a_ij} E_j; E_i F_j - F_j E_i = delta_ij (K_i - K_i^{-1})/(q - q^{-1}); Serre relations")
def _uq_relations(ctx):
    alg = ctx.alg
    N = ctx.N
    q, qi = q_pow(1), q_pow(-1)
    E, F, K = alg.E, alg.F, alg.K
    items = []
    lam, mu = alg.omega(1), alg.omega(N)
    items.append(("K K", K(lam) * K(mu) - K(tuple(a + b for a, b in zip(lam, mu)))))
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            a = alg.cartan(i, j)
            Ki, Kim = alg.K_alpha(i), alg.K_alpha(i, -1)
            items.append(("K%d E%d" % (i, j), Ki * E(j) * Kim - E(j).scale(q_pow(a))))
            items.append(("K%d F%d" % (i, j), Ki * F(j) * Kim - F(j).scale(q_pow(-a))))
            rhs = (Ki - Kim).scale(Scalar(1) / (q - qi)) if i == j else alg.zero()
            items.append(("E%d F%d" % (i, j), E(i) * F(j) - F(j) * E(i) - rhs))
            if abs(i - j) == 1:
                for X, tag in ((E, "E"), (F, "F")):
                    s = X(i) * X(i) * X(j) - (X(i) * X(j) * X(i)).scale(q + qi) + X(j) * X(i) * X(i)
                    items.append(("Serre %s%d%d" % (tag, i, j), s))
            elif i < j:
                for X, tag in ((E, "E"), (F, "F")):
                    items.append(("commute %s%d%d" % (tag, i, j), X(i) * X(j) - X(j) * X(i)))
    return _first((label, _uq_witness(x)) for label, x in items)


@check("uqalg.normal-form-confluence", "rewriting-order independence of the normal form")
def _uq_confluence(ctx):
    alg = ctx.alg
    rng = random.Random(3)
    for n in range(200):
        letters = random_letters(alg, rng, rng.randint(2, 6))
        a = _letters_to_element(alg, letters)
        b = normal_form(alg, [(Scalar(1), letters)], rng=rng)
        if a != b:
            return False, "expression %d: %s" % (n, _uq_witness(a - b))
    return True, None


@check("uqalg.pbw-count", "PBW basis: irreducible words counted by Kostant partitions")
def _uq_pbw(ctx):
    height = 6
    if ctx.bound < height:
        raise DegreeBoundExceeded(height, ctx.bound)
    sys = gb_complete("E", ctx.N, ctx.bound)
    for d in range(height + 1):
        by_weight = {}
        for w in irreducible_words(sys, d):
            mu = tuple(w.count(i) for i in range(1, ctx.N + 1))
            by_weight[mu] = by_weight.get(mu, 0) + 1
        for mu in product(range(d + 1), repeat=ctx.N):
            if sum(mu) != d:
                continue
            got, want = by_weight.get(mu, 0), kostant_count(mu)
            if got != want:
                return False, "weight %s: %d irreducible words, %d partitions" % (mu, got, want)
    return True, None


def _hopf_span(ctx):
    def build():
        alg = ctx.alg
        esys, fsys = alg.esys, alg.fsys
        ewords = [w for d in range(4) for w in irreducible_words(esys, d)]
        fwords = [w for d in range(4) for w in irreducible_words(fsys, d)]
        lams = [alg.zero_weight, alg.omega(ctx.N)]
        out = []
        for f in fwords:
            for e in ewords:
                if len(f) + len(e) <= 3:
                    for lam in lams:
                        out.append(UqElement(alg, {(f, lam, e): Scalar(1)}))
        return out
    return ctx.get("hopf-span", build)


def _tensor_witness(t):
    if t.is_zero():
        return None
    return str(Tensor(t.alg, t.legs, dict([next(iter(sorted(t.terms.items(), key=str)))])))


@check("uqalg.hopf-coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta")
def _hopf_coassoc(ctx):
    def d(m):
        return coproduct(UqElement(ctx.alg, {m: Scalar(1)}))
    out = []
    for x in _hopf_span(ctx):
        t = coproduct(x)
        out.append((str(x), _tensor_witness(t.map_leg(0, d) - t.map_leg(1, d))))
    return _first(out)


@check("uqalg.hopf-counit", "(eps (x) id) Delta = id = (id (x) eps) Delta")
def _hopf_counit(ctx):
    alg = ctx.alg

    def eps(m):
        return alg.scalar(counit(UqElement(alg, {m: Scalar(1)})))

    out = []
    for x in _hopf_span(ctx):
        t = coproduct(x)
        for leg in (0, 1):
            r = t.map_leg(leg, eps).multiply_legs() - x
            out.append(("%s leg %d" % (x, leg), _uq_witness(r)))
    return _first(out)


@check("uqalg.hopf-antipode", "m (S (x) id) Delta = eta eps = m (id (x) S) Delta")
def _hopf_antipode(ctx):
    alg = ctx.alg

    def S(m):
        return antipode(UqElement(alg, {m: Scalar(1)}))

    out = []
    for x in _hopf_span(ctx):
        t = coproduct(x)
        unit = alg.scalar(counit(x))
        for leg in (0, 1):
            r = t.map_leg(leg, S).multiply_legs() - unit
            out.append(("%s leg %d" % (x, leg), _uq_witness(r)))
    return _first(out)


@check("uqalg.hopf-antipode-inverse", "S S^{-1} = id = S^{-1} S")
def _hopf_sinv(ctx):
    out = []
    for x in _hopf_span(ctx):
        out.append((str(x), _uq_witness(antipode(antipode_inv(x)) - x)))
        out.append((str(x), _uq_witness(antipode_inv(antipode(x)) - x)))
    return _first(out)


@check("uqalg.star", "star star = id; Delta star = (star (x) star) Delta")
def _hopf_star(ctx):
    alg = ctx.alg

    def st(m):
        return star(UqElement(alg, {m: Scalar(1)}))

    out = []
    span = _hopf_span(ctx)
    for x in span:
        out.append(("%s involution" % x, _uq_witness(star(star(x)) - x)))
        lhs = coproduct(star(x))
        rhs = coproduct(x).map_leg(0, st).map_leg(1, st)
        out.append(("%s coproduct" % x, _tensor_witness(lhs - rhs)))
    gens = [alg.E(i) for i in range(1, ctx.N + 1)] + [alg.F(i) for i in range(1, ctx.N + 1)]
    for a, b in product(gens, repeat=2):
        out.append(("%s ; %s anti-multiplicative" % (a, b), _uq_witness(star(a * b) - star(b) * star(a))))
    return _first(out)


@check("rootvec.construction", "E_{xi_i} = T_i ... T_{N-1}(E_N) = -E_i E_{xi_{i+1}} + q^{-1} E_{xi_{i+1}} E_i")
def _rv_build(ctx):
    rv = ctx.rv
    for i in range(1, ctx.N + 1):
        if _chain(rv.alg, i) != rv.E(i):
            return False, "chain and recursion differ at i=%d: %s" % (i, _uq_witness(_chain(rv.alg, i) - rv.E(i)))
        if weight(rv.E(i)) != rv.xi(i):
            return False, "E_xi[%d] has weight %s" % (i, weight(rv.E(i)))
    return True, None


def _identity_family(name, anchor, source):
    def run(ctx):
        out = []
        for ident in ctx.get(source.__name__, lambda: list(source(ctx.rv))):
            if ident.name.split("[")[0] != name:
                continue
            w = None if identity_holds(ident) else _uq_witness(ident.residual, ident.mode == "levi")
            out.append((ident.name, w))
        return _first(out)
    CHECKS.append(Check("rootvec." + name, anchor, run))


for _name, _anchor in [
        ("root-K-commute", "E_{xi_{i+1}} K_i = q K_i E_{xi_{i+1}}"),
        ("F-root-commutator", "[F_i, E_{xi_i}] = -q^{-1} K_i^{-1} E_{xi_{i+1}}"),
        ("star-root-E", "E_{xi_i}^* E_i - q E_i E_{xi_i}^* = -q^{-1} E_{xi_{i+1}}^*"),
        ("star-root-cross", "E_{xi_i}^* E_{xi_j} ~ q E_{xi_j} E_{xi_i}^*"),
        ("star-root-diag", "E_{xi_i} E_{xi_i}^* - q^{-2} E_{xi_i}^* E_{xi_i} + q^{-1}(q - q^{-1}) sum_{k>i} q^{3(i-k)} E_{xi_k}^* E_{xi_k} ~ 0"),
        ("cal-cross", "cal E_i^* cal E_j ~ q^{-1} cal E_j cal E_i^*"),
        ("cal-diag", "cal E_i^* cal E_i - q^{-2} cal E_i cal E_i^* + q^{-1}(q - q^{-1}) sum_{k>i} q^{i-k} cal E_k cal E_k^* ~ 0"),
        ("antipode-square", "S(E_{xi_i}) = q^{-2(N-i+1)} S^{-1}(E_{xi_i})"),
        ("adjoint-E", "E_j |> E_{xi_i} = -delta_{j,i-1} E_{xi_{i-1}}"),
        ("adjoint-F", "F_j |> E_{xi_i} = -delta_{j,i} E_{xi_{i+1}}"),
        ("adjoint-K", "K_lambda |> E_{xi_k} = q^{(lambda, xi_k)} E_{xi_k}")]:
    _identity_family(_name, _anchor, root_vector_identities)
_identity_family("cal-cross-printed", "cal E_i cal E_j^* ~ q^{-1} cal E_j^* cal E_i", printed_cal_cross)


@check("rootvec.orthonormal-transport", "(e_a, X |> e_b) = (X^* |> e_a, e_b) on the rescaled root vectors")
def _rv_transport(ctx):
    return _first((label, None if lhs == rhs else "%s vs %s" % (lhs, rhs))
                  for label, lhs, rhs in transport_checks(ctx.rv))


@check("qext.braid-relation", "R12 R23 R12 = R23 R12 R23")
def _qext_braid(ctx):
    N = ctx.N
    if not braid_relation_holds(rhat(N), N):
        return False, "braid relation fails for the braiding on u_+"
    if not braid_relation_holds(rhat_dual(N), N):
        return False, "braid relation fails for the dual braiding"
    return True, None


@check("qext.braiding-eigenvectors", "R(e_i # e_i) = q e_i # e_i; R(e_i # e_j + q^{-1} e_j # e_i) = q (...); R(e_i # e_j - q e_j # e_i) = -q^{-1} (...)")
def _qext_eigen(ctx):
    N = ctx.N
    for label, t, res in eigen_residuals(N):
        if any(res):
            return False, "%s eigenvector %s" % (label, t)
    pos, neg = braiding_eigenspaces(N)
    if (len(pos), len(neg)) != (N * (N + 1) // 2, N * (N - 1) // 2):
        return False, "eigenspace dimensions %d, %d" % (len(pos), len(neg))
    return True, None


@check("qext.quadratic-duals", "f_a # f_a and f_i # f_j + q f_j # f_i span the annihilator of Lambda^2(u_+)")
def _qext_duals(ctx):
    pos, neg = braiding_eigenspaces(ctx.N)
    duals = dual_relations(ctx.N)
    for y in duals:
        for x in neg:
            val = tensor_pairing(y, x)
            if val:
                return False, "<%s, %s> = %s" % (y, x, val)
    # nondegenerate against the symmetric part, so the span is the full annihilator
    rows = [[tensor_pairing(y, x) for x in pos] for y in duals]
    if ScalarMatrix(rows).rank() != len(pos):
        return False, "pairing with the symmetric tensors is degenerate"
    return True, None


@check("qext.antisymmetrizer", "pi(A(e_I)) = q^{k(k-1)/2} [k]! e_I with A(e_I) antisymmetric")
def _qext_antisym(ctx):
    N = ctx.N
    for sign in ("+", "-"):
        for I in subsets(N):
            k = len(I)
            t = antisymmetrize(I, sign)
            want = ExtVector.basis(sign, I).scale(v_pow(k * (k - 1)) * q_factorial(k))
            if project_pi(t) != want:
                return False, "sign %s, I=%s" % (sign, _fmt(I))
            if k >= 2 and not in_antisymmetric_tensors(t, N):
                return False, "A(e_%s) is not antisymmetric (sign %s)" % (_fmt(I), sign)
    return True, None


@check("qext.pairing-value", "<f_I, e_I> = q^{-k(k-1)/2} / [k]!")
def _qext_pairing(ctx):
    for I in subsets(ctx.N):
        k = len(I)
        val = raw_pairing(ExtVector.basis("-", I), ExtVector.basis("+", I))
        want = v_pow(-k * (k - 1)) / q_factorial(k)
        if val != want:
            return False, "I=%s: %s vs %s" % (_fmt(I), val, want)
    return True, None


@check("qext.levi-weight", "K_{omega_N} acts on Lambda^k(u_+) as q^k")
def _qext_weight(ctx):
    alg = ctx.alg
    K = alg.K(alg.omega(ctx.N))
    for I in subsets(ctx.N):
        x = ExtVector.basis("+", I)
        if levi_action(K, x) != x.scale(q_pow(len(I))):
            return False, "e_%s" % _fmt(I)
    return True, None


@check("qcliff.cross-relations", "e_i i_j = -q^{-1} i_j e_i (i != j)")
def _cliff_cross(ctx):
    N = ctx.N
    qi = q_pow(-1)
    out = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i != j:
                r = exterior(i, N) * interior(j, N) + (interior(j, N) * exterior(i, N)) * qi
                out.append(("(%d,%d)" % (i, j), _matrix_witness(r)))
    return _first(out)


@check("qcliff.quadratic-constant", "e_i i_i - q(q - q^{-1}) sum_{j<i} e_j i_j + i_i e_i = id")
def _cliff_quad(ctx):
    N = ctx.N
    q, qi = q_pow(1), q_pow(-1)
    out = []
    for i in range(1, N + 1):
        op = exterior(i, N) * interior(i, N) + interior(i, N) * exterior(i, N)
        for j in range(1, i):
            op = op - (exterior(j, N) * interior(j, N)) * (q * (q - qi))
        out.append(("i=%d" % i, _matrix_witness(op - CliffOp.identity(N))))
    return _first(out)


@check("qcliff.classical-limit", "i_i e_j + e_j i_i = delta_ij id at q = 1")
def _cliff_classical(ctx):
    N = ctx.N
    n = 2 ** N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            op = interior(i, N) * exterior(j, N) + exterior(j, N) * interior(i, N)
            m = op.specialize(1)
            for r in range(n):
                for c in range(n):
                    want = 1 if (i == j and r == c) else 0
                    if m[r][c] != want:
                        return False, "(%d,%d) entry (%d,%d) = %s" % (i, j, r, c, m[r][c])
    return True, None


@check("qcliff.adjoint", "gamma_-(f_a)^* = gamma_+(e_a)")
def _cliff_adjoint(ctx):
    N = ctx.N
    prof = ScalingProfile.normalized(N)
    return _first(("a=%d" % a, _matrix_witness(hermitian_adjoint(interior(a, N), prof) - exterior(a, N)))
                  for a in range(1, N + 1))


@check("qcliff.rescaling", "gamma_i^* gamma_j = (c_k/c_{k-1}) e_i i_j; gamma_i gamma_j^* = (c_{k+1}/c_k) i_i e_j")
def _cliff_rescale(ctx):
    N = ctx.N
    prof = ctx.scaling
    c = prof.c
    out = []
    for i, j in product(range(1, N + 1), repeat=2):
        for k in range(1, N + 1):
            lhs = gamma_star(i, prof, k - 1) * gamma(j, prof, k)
            rhs = (exterior(i, N) * interior(j, N) * degree_projector(N, k)) * (c[k] / c[k - 1])
            out.append(("star-first (%d,%d) k=%d" % (i, j, k), _matrix_witness(lhs - rhs)))
        for k in range(N):
            lhs = gamma(i, prof, k + 1) * gamma_star(j, prof, k)
            rhs = (interior(i, N) * exterior(j, N) * degree_projector(N, k)) * (c[k + 1] / c[k])
            out.append(("star-last (%d,%d) k=%d" % (i, j, k), _matrix_witness(lhs - rhs)))
    return _first(out)


@check("qcliff.spanning", "i-monomials times e-monomials span End(Lambda_q(u_+))")
def _cliff_span(ctx):
    r = spanning_rank(ctx.N)
    return (r == 4 ** ctx.N), (None if r == 4 ** ctx.N else "rank %d of %d" % (r, 4 ** ctx.N))


def _dirac_witness(d, levi=False):
    if levi:
        return first_non_levi(d)
    for (J, I), x in sorted(d.entries.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], len(kv[0][1]), kv[0][1])):
        return "entry [%s,%s]: %s" % (_fmt(J), _fmt(I), _uq_witness(x))
    return None


@check("dirac.eth-nilpotent", "eth^2 = 0")
def _dirac_eth2(ctx):
    _, _, _, e2, es2 = ctx.square
    w = _dirac_witness(e2) or _dirac_witness(es2)
    return w is None, w


@check("dirac.self-adjoint", "D = eth + eth^*, D^* = D")
def _dirac_selfadj(ctx):
    D = dirac(ctx.N, ctx.scaling, ctx.bound)
    w = _dirac_witness(D.star(ctx.scaling) - D)
    return w is None, w


@check("dirac.square-split", "D^2 = D^2_D + D^2_O")
def _dirac_split(ctx):
    D2, diag, off, _, _ = ctx.square
    w = _dirac_witness(D2 - diag - off)
    return w is None, w


@check("dirac.lemma-diagonal", "D^2_D ~ sum_i cal E_i cal E_i^* (x) (gamma_i gamma_i^* + q^{-2} gamma_i^* gamma_i - q^{-1}(q - q^{-1}) sum_{j<i} q^{j-i} gamma_j^* gamma_j)")
def _dirac_lemma_d(ctx):
    _, diag, _, _, _ = ctx.square
    fd, _ = lemma_forms(ctx.N, ctx.scaling, ctx.bound)
    w = _dirac_witness(diag - fd, levi=True)
    return w is None, w


@check("dirac.lemma-off-diagonal", "D^2_O ~ sum_{i != j} cal E_i cal E_j^* (x) (gamma_i gamma_j^* + q^{-1} gamma_j^* gamma_i)")
def _dirac_lemma_o(ctx):
    _, _, off, _, _ = ctx.square
    _, fo = lemma_forms(ctx.N, ctx.scaling, ctx.bound)
    w = _dirac_witness(off - fo, levi=True)
    return w is None, w


@check("dirac.off-diagonal-vanishes", "D^2_O ~ 0 iff c_{k+1}/c_k = (c_k/c_{k-1}) q^{-2}")
def _dirac_off_zero(ctx):
    _, _, off, _, _ = ctx.square
    w = _dirac_witness(off, levi=True)
    return w is None, w


@check("dirac.main-theorem", "D^2 ~ C (x) T")
def _dirac_main(ctx):
    c0, c1 = ctx.c_pair()
    fam = "recurrence" if ctx.config.profile == "recurrence" else "closed"
    prof = ctx.scaling if ctx.config.profile == "all-ones" else None
    r = main_theorem_residual(ctx.N, c0, c1, ctx.bound, profile=prof, family=fam)
    w = _dirac_witness(r, levi=True)
    return w is None, w


@check("dirac.T-branches", "T = (c_1/c_0) q^{-2k} (k <= 2), q^{-2k} (k > 2)")
def _dirac_T(ctx):
    c0, c1 = ctx.c_pair()
    tp = TProfile(ctx.N, c0, c1, "closed")
    prof = tp.scaling_profile()
    for k in range(ctx.N + 1):
        want = c1 / c0 * q_pow(-2 * k) if k <= 2 else q_pow(-2 * k)
        got = operator_T(k, c0, c1)
        if got != want:
            return False, "k=%d: %s" % (k, got)
        if got != t_from_ratios(prof, k):
            return False, "k=%d: display %s vs ratio form %s" % (k, got, t_from_ratios(prof, k))
    return True, None


@check("dirac.T-tilde", "T~ = K_{omega_N}^2 T; T~ = 1 when c_0 = c_1")
def _dirac_Ttilde(ctx):
    c0, c1 = ctx.c_pair()
    alg = ctx.alg
    K2 = alg.K(tuple(2 * a for a in alg.omega(ctx.N)))
    for k in range(ctx.N + 1):
        tt = operator_T_tilde(k, c0, c1)
        I = tuple(range(1, k + 1))
        x = ExtVector.basis("+", I)
        if levi_action(K2, x.scale(operator_T(k, c0, c1))) != x.scale(tt):
            return False, "k=%d: K_{omega_N}^2 T differs from T~ = %s" % (k, tt)
        if tt != q_pow(2 * k) * operator_T(k, c0, c1):
            return False, "k=%d" % k
        if tt != operator_T_tilde(k, 1, 1) * (c1 / c0 if k <= 2 else Scalar(1)):
            return False, "k=%d: %s" % (k, tt)
        if operator_T_tilde(k, 1, 1) != Scalar(1):
            return False, "k=%d: T~ = %s at c_0 = c_1" % (k, operator_T_tilde(k, 1, 1))
    return True, None


def _all_ones(N):
    return ScalingProfile.from_c([Scalar(1)] * (N + 1))


@check("dirac.negative-control-off-diagonal", "D^2_O ~ 0 fails for c_k = 1")
def _neg_off(ctx):
    _, _, off, _, _ = square_decompose(ctx.N, _all_ones(ctx.N), ctx.bound)
    w = _dirac_witness(off, levi=True)
    if w is None:
        return False, "no non-Levi entry: the control did not fire"
    return True, "expected " + w


@check("dirac.negative-control-residual", "D^2 ~ C (x) T fails for c_k = 1")
def _neg_res(ctx):
    r = main_theorem_residual(ctx.N, 1, 1, ctx.bound, profile=_all_ones(ctx.N))
    w = _dirac_witness(r, levi=True)
    if w is None:
        return False, "no non-Levi entry: the control did not fire"
    return True, "expected " + w


@check("dirac.casimir-commutant", "[C, X] = 0 for X in U_q(l)")
def _dirac_commutant(ctx):
    C = casimir_C(ctx.N, ctx.bound)
    rep = levi_commutant_report(C)
    return _first((name, _uq_witness(r)) for name, r in rep)


@check("dirac.casimir-tilde-commutant", "X |> C~ = eps(X) C~ for X in U_q(l)")
def _dirac_commutant_tilde(ctx):
    rep = levi_commutant_report(casimir_C_tilde(ctx.N, ctx.bound))
    return _first((name, _uq_witness(r)) for name, r in rep)


@check("dirac.appendix-subidentities", "E_j |> (E_{xi_i}^* E_{xi_i}) = delta_{j,i} q^{-2} E_{xi_{i+1}}^* E_{xi_i} - delta_{j,i-1} q E_{xi_i}^* E_{xi_{i-1}}; K_{i-1}^{-1} |> E_{xi_i} = q E_{xi_i}")
def _dirac_appendix(ctx):
    items = list(appendix_identities(ctx.N, ctx.bound))[:-1]
    return _first((label, _uq_witness(r)) for label, r in items)


@check("dirac.antipode-casimir-constant", "S^{-1}(C~) = q^{-2(N+1)} C")
def _dirac_sinv(ctx):
    label, r = list(appendix_identities(ctx.N, ctx.bound))[-1]
    w = _uq_witness(r)
    return w is None, w


# -- running ----------------------------------------------------------------

def _selected(check_id, patterns):
    if not patterns:
        return True
    return any(check_id == p or check_id.startswith(p.rstrip(".") + ".") for p in patterns)


def _run(config, bound):
    ctx = _Context(config, bound)
    records = []
    for chk in CHECKS:
        if not _selected(chk.check_id, config.checks):
            continue
        log.info("running %s", chk.check_id)
        t0 = time.perf_counter()
        ok, witness = chk.run(ctx)
        ms = round((time.perf_counter() - t0) * 1000.0, 1) if config.timings else None
        if not ok:
            log.warning("%s failed: %s", chk.check_id, witness)
        records.append(Record(chk.check_id, chk.paper_anchor, "pass" if ok else "fail", witness, ms))
    return Report(config, records)


def run_checks(config):
    """
    Run the selected checks in a fixed order.

    If the degree bound is too small for some computation, the smallest bound
    that lets every selected check run is searched for and reported in a
    ConfigurationError.
    """
    config.validate()
    try:
        return _run(config, config.degree_bound)
    except DegreeBoundExceeded as exc:
        log.info("bound %d too small (%s); searching for the minimal bound", config.degree_bound, exc)
        b = config.degree_bound
        while True:
            b += 1
            try:
                _run(config, b)
                break
            except DegreeBoundExceeded:
                continue
        raise ConfigurationError("degree bound %d is too small; the minimal sufficient bound is %d"
                                 % (config.degree_bound, b)) from exc


def emit_report(report, fmt="json"):
    """Serialize a Report as bytes; ``fmt`` is "json" or "text"."""
    records = report.records
    if fmt == "json":
        doc = {
            "tool": "qdolbeault",
            "version": __version__,
            "config": report.config.describe() if report.config else None,
            "checks": [
                {
                    "check_id": r.check_id,
                    "paper_anchor": r.paper_anchor,
                    "status": r.status,
                    "witness": r.witness,
                    "millis": r.millis,
                }
                for r in records
            ],
            "summary": {
                "total": len(records),
                "passed": sum(r.status == "pass" for r in records),
                "failed": sum(r.status == "fail" for r in records),
            },
        }
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError("unknown format %r" % (fmt,))
    width = max([len(r.check_id) for r in records] + [8])
    lines = ["%-6s  %-*s  %s" % ("STATUS", width, "CHECK", "ANCHOR")]
    for r in records:
        line = "%-6s  %-*s  %s" % (r.status.upper(), width, r.check_id, r.paper_anchor)
        if r.millis is not None:
            line += "  [%.1f ms]" % r.millis
        lines.append(line)
        if r.witness:
            lines.append("%-6s  %-*s  witness: %s" % ("", width, "", r.witness))
    passed = sum(r.status == "pass" for r in records)
    lines.append("%d checks, %d passed, %d failed" % (len(records), passed, len(records) - passed))
    return ("\n".join(lines) + "\n").encode("utf-8")
