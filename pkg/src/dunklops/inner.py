"""Weighted Gaussian inner products, exactly and by Monte Carlo.

Test functions are polynomials in the basis coordinates t_1..t_n times the
unit Gaussian exp(-|t|^2); the pairing is

    <f, g>_k = integral over the reflection representation of
               f(t) conj(g(t)) prod_a |<a, x(t)>|^{2k} dt.

Products of two test functions carry exp(-2|t|^2), so exact integration uses
the doubled-exponent moment table, one even moment per coordinate. The exact
path needs every |form|^{2k} to be the polynomial form^{2k}, i.e. 2k an even
nonnegative integer; every other rational k > -1/2 goes through the sampler,
which draws t ~ N(0, 1/4)^n (density proportional to exp(-2|t|^2)) and
reweights by Z = (pi/2)^{n/2}.

Operators act on the ambient-coordinate lift; since reflections fix the
Gaussian and d_xi exp(-|x|^2) = -2 <xi, x> exp(-|x|^2) for directions in the
sum-zero hyperplane, applying an operator under the Gaussian means applying
it to the polynomial part and subtracting 2 <xi, x> times it. That damped
form is what both integration paths consume.
"""

import hashlib
from fractions import Fraction

import numpy as np

from .algebra import FieldElem, felem, sqrt_rational
from .dirac import DiracContext
from .dunkl import OrthonormalBasis, drift_apply, dunkl_apply
from .polyring import (
    Monomial,
    Polynomial,
    RationalSection,
    SectionVector,
    directional_derivative,
)
from .rootsys import pairing, weight_poly

__all__ = [
    "DEFAULT_SEED",
    "GaussianTestFn",
    "ExactIntegral",
    "MCEstimate",
    "gaussian_moment",
    "inner_product_exact",
    "inner_product_mc",
    "exact_weighted_integral",
    "adjoint_residual_derivative",
    "skew_residual",
    "stream_seed",
]

DEFAULT_SEED = 1729
_MC_CHUNK = 1 << 17


def stream_seed(seed, label):
    """Derive an independent, reproducible RNG stream from a user seed and a
    task label (stable across platforms and processes)."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return np.random.SeedSequence(int.from_bytes(digest[:16], "big"))


class GaussianTestFn:
    """Polynomial in basis coordinates times the unit Gaussian."""

    __slots__ = ("poly",)

    def __init__(self, poly):
        if not isinstance(poly, Polynomial):
            raise TypeError("expected a Polynomial in basis coordinates")
        self.poly = poly

    @property
    def nvars(self):
        return self.poly.nvars

    def conj(self):
        return GaussianTestFn(self.poly.conj())

    def __eq__(self, other):
        return isinstance(other, GaussianTestFn) and self.poly == other.poly

    def __str__(self):
        return f"({self.poly}) * exp(-|t|^2)"

    __repr__ = __str__


class ExactIntegral:
    """An exact value c * pi^p with c in the scalar field and p rational."""

    __slots__ = ("coeff", "pi_power")

    def __init__(self, coeff, pi_power):
        self.coeff = felem(coeff) if not isinstance(coeff, FieldElem) else coeff
        self.pi_power = Fraction(pi_power)

    @property
    def is_zero(self):
        return self.coeff.is_zero

    def __add__(self, other):
        if not isinstance(other, ExactIntegral):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_power != other.pi_power:
            raise ValueError("cannot add integrals with different pi powers")
        return ExactIntegral(self.coeff + other.coeff, self.pi_power)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExactIntegral(-self.coeff, self.pi_power)

    def __mul__(self, other):
        if isinstance(other, ExactIntegral):
            return ExactIntegral(
                self.coeff * other.coeff, self.pi_power + other.pi_power
            )
        return ExactIntegral(self.coeff * felem(other), self.pi_power)

    __rmul__ = __mul__

    def approx(self):
        return self.coeff.approx() * float(np.pi) ** float(self.pi_power)

    def __eq__(self, other):
        if not isinstance(other, ExactIntegral):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.coeff == other.coeff and self.pi_power == other.pi_power

    def __str__(self):
        if self.is_zero:
            return "0"
        if self.pi_power == 0:
            return str(self.coeff)
        return f"({self.coeff}) * pi^({self.pi_power})"

    __repr__ = __str__


class MCEstimate:
    """Monte Carlo estimate of one real quantity."""

    __slots__ = ("mean", "stderr", "samples", "seed", "component")

    def __init__(self, mean, stderr, samples, seed, component="re"):
        self.mean = float(mean)
        self.stderr = float(stderr)
        self.samples = int(samples)
        self.seed = seed
        self.component = component

    def within(self, value, nsigma):
        """|mean - value| <= nsigma * stderr, with a hair of absolute slack so
        zero-variance integrands are not failed by float rounding."""
        slack = 1e-12 * (1.0 + abs(value))
        return abs(self.mean - value) <= nsigma * self.stderr + slack

    def __repr__(self):
        return (
            f"MCEstimate({self.component}={self.mean:.6g} "
            f"+- {self.stderr:.2g}, n={self.samples})"
        )


def _double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def gaussian_moment(mono):
    """Moment of the unit Gaussian: integral of t^m exp(-|t|^2) dt over R^n.

    Odd exponents give zero; each even exponent 2j contributes
    (2j-1)!! sqrt(pi) / 2^j.
    """
    exps = mono.exponents if isinstance(mono, Monomial) else tuple(mono)
    n = len(exps)
    power = Fraction(n, 2)
    if any(e % 2 for e in exps):
        return ExactIntegral(felem(0), power)
    coeff = Fraction(1)
    for e in exps:
        j = e // 2
        coeff *= Fraction(_double_factorial(2 * j - 1), 2**j)
    return ExactIntegral(felem(coeff), power)


def _integrate_t(tpoly):
    """Integrate a polynomial against exp(-2|t|^2) over R^n, exactly."""
    n = tpoly.nvars
    total = felem(0)
    for m, c in tpoly.data.items():
        if any(e & 1 for e in m):
            continue
        factor = Fraction(1)
        for e in m:
            j = e >> 1
            factor *= Fraction(_double_factorial(2 * j - 1), 4**j)
        total = total + FieldElem._wrap(c) * felem(factor)
    total = total * sqrt_rational(Fraction(1, 2**n))
    return ExactIntegral(total, Fraction(n, 2))


# -- coordinate bridges -------------------------------------------------------

class _Bridge:
    """Exact substitutions between basis coordinates t and the ambient
    coordinates of the sum-zero hyperplane (x = sum_a t_a u_a)."""

    def __init__(self, basis):
        self.basis = basis
        self.n = len(basis.vectors)
        self.m = basis.system.ambient_dim
        # t_a as a form in x, and x_i as a form in t
        self._t_forms = [
            Polynomial.linear_form(self.m, v) for v in basis.vectors
        ]
        self._x_forms = [
            Polynomial.linear_form(self.n, [v[i] for v in basis.vectors])
            for i in range(self.m)
        ]
        self._t_pows = [{0: Polynomial.constant(self.m, 1), 1: f} for f in self._t_forms]
        self._x_pows = [{0: Polynomial.constant(self.n, 1), 1: f} for f in self._x_forms]

    @staticmethod
    def _power(cache, e):
        if e not in cache:
            top = max(cache)
            acc = cache[top]
            while top < e:
                acc = acc * cache[1]
                top += 1
                cache[top] = acc
        return cache[e]

    def _substitute(self, poly, pows, out_nvars):
        out = Polynomial.zero(out_nvars)
        for m, c in poly.data.items():
            term = Polynomial.constant(out_nvars, FieldElem._wrap(c))
            for idx, e in enumerate(m):
                if e:
                    term = term * self._power(pows[idx], e)
            out = out + term
        return out

    def to_ambient(self, tpoly):
        if tpoly.nvars != self.n:
            raise ValueError("expected a polynomial in basis coordinates")
        return self._substitute(tpoly, self._t_pows, self.m)

    def to_t(self, ambient_poly):
        if ambient_poly.nvars != self.m:
            raise ValueError("expected a polynomial in ambient coordinates")
        return self._substitute(ambient_poly, self._x_pows, self.n)


_BRIDGES = {}
_WEIGHT_T = {}
_WEIGHT_AMBIENT = {}


def _bridge(basis):
    br = _BRIDGES.get(basis)
    if br is None:
        br = _Bridge(basis)
        _BRIDGES[basis] = br
    return br


def _default_basis(ctx, basis):
    if basis is None:
        return OrthonormalBasis.standard(ctx.system)
    if basis.system != ctx.system:
        raise ValueError("basis belongs to a different system")
    return basis


def _weight_ambient(ctx):
    key = (ctx.system.rank, ctx.k.value)
    wt = _WEIGHT_AMBIENT.get(key)
    if wt is None:
        wt = weight_poly(ctx.k)
        _WEIGHT_AMBIENT[key] = wt
    return wt


def _weight_t(ctx, basis):
    key = (ctx.k.value, basis)
    wt = _WEIGHT_T.get(key)
    if wt is None:
        wt = _bridge(basis).to_t(_weight_ambient(ctx))
        _WEIGHT_T[key] = wt
    return wt


# -- exact pairings -----------------------------------------------------------

def _require_exact_k(ctx):
    if not ctx.k.doubled_is_even_nonneg:
        raise ValueError(
            "exact integration needs 2k an even nonnegative integer; "
            f"got 2k={2 * ctx.k.value} (use the Monte Carlo path)"
        )


def inner_product_exact(ctx, f, g, basis=None):
    """<f, g>_k for test functions, conjugate-linear in the second slot."""
    basis = _default_basis(ctx, basis)
    n = ctx.system.rank
    if f.nvars != n or g.nvars != n:
        raise ValueError("test functions must use one variable per basis vector")
    _require_exact_k(ctx)
    if ctx.k.value == 0:
        integrand = f.poly * g.poly.conj()
    else:
        integrand = f.poly * g.poly.conj() * _weight_t(ctx, basis)
    return _integrate_t(integrand)


def exact_weighted_integral(ctx, A, B, basis=None):
    """Integral of A conj(B) delta_k exp(-2|t|^2) for ambient sections A, B.

    The weight must clear every pole: if the product fails to be polynomial
    the pairing is not defined on this input and a ValueError is raised.
    """
    basis = _default_basis(ctx, basis)
    _require_exact_k(ctx)
    if isinstance(A, Polynomial):
        A = RationalSection.from_poly(A)
    if isinstance(B, Polynomial):
        B = RationalSection.from_poly(B)
    prod = A * B.conj()
    if prod.is_polynomial:
        # pole-free: weight in t-coordinates, one variable fewer
        tpoly = _bridge(basis).to_t(prod.as_polynomial())
        if ctx.k.value != 0:
            tpoly = tpoly * _weight_t(ctx, basis)
        return _integrate_t(tpoly)
    if ctx.k.value != 0:
        prod = prod * _weight_ambient(ctx)
    if not prod.is_polynomial:
        raise ValueError(
            "weighted integrand keeps a pole; the pairing is undefined here"
        )
    return _integrate_t(_bridge(basis).to_t(prod.as_polynomial()))


# -- damped operator application ---------------------------------------------

def _check_direction(ctx, xi):
    xi = tuple(xi)
    if len(xi) != ctx.system.ambient_dim:
        raise ValueError("direction has wrong ambient dimension")
    if ctx.system.rank > 1:
        total = felem(0)
        for c in xi:
            total = total + felem(c) if not isinstance(c, FieldElem) else total + c
        if not total.is_zero:
            raise ValueError(
                "directions must lie in the sum-zero hyperplane"
            )
    return xi


def _damp_term(xi, F):
    """-2 <xi, x> F, the Gaussian's contribution to any first-order action."""
    m = F.nvars
    form = Polynomial.linear_form(m, [felem(-2) * felem_of(c) for c in xi])
    return F * form


def felem_of(c):
    return c if isinstance(c, FieldElem) else felem(c)


def _damped_scalar(kind, ctx, xi, sec):
    if kind == "deriv":
        base = directional_derivative(sec, xi)
    elif kind == "dunkl":
        base = dunkl_apply(ctx, xi, sec)
    elif kind == "drift":
        base = drift_apply(ctx, xi, sec)
    else:
        raise ValueError(f"unknown operator tag {kind!r}")
    return base + _damp_term(xi, sec)


def _damped_dirac(dctx, F):
    """D applied under the Gaussian: each direction contributes its damped
    twisted application, then the Clifford factor."""
    out = None
    for a, u in enumerate(dctx.basis):
        damped = dctx.twisted_apply(u, F) + _damp_term(u, F)
        term = damped.matrix_action(dctx.clifford_action(a))
        out = term if out is None else out + term
    return out


# -- residual assembly (shared by the exact and sampling paths) ---------------

def _grad_log_term(ctx, xi):
    """<grad log weight, xi> as a rational section: sum_a 2k <a, xi>/<a, x>."""
    m = ctx.system.ambient_dim
    acc = RationalSection.zero(m)
    two_k = 2 * ctx.k.value
    if two_k:
        for root in ctx.system.positive_roots:
            pr = pairing(root, tuple(felem_of(c) for c in xi))
            if not pr.is_zero:
                acc = acc + RationalSection(
                    Polynomial.constant(m, pr * felem(two_k)), {root.key: 1}
                )
    return acc


def _lift(ctx, basis, f):
    return RationalSection.from_poly(_bridge(basis).to_ambient(f.poly))


def _adjoint_pairs(ctx, xi, f, g, basis):
    """Pairs (A, B, sign) whose signed weighted sum is the residual of
    the derivative-adjoint identity d* = -d - <grad log weight, xi>."""
    fa = _lift(ctx, basis, f)
    ga = _lift(ctx, basis, g)
    pairs = [
        (_damped_scalar("deriv", ctx, xi, fa), ga, 1),
        (fa, _damped_scalar("deriv", ctx, xi, ga), 1),
        (fa, ga * _grad_log_term(ctx, xi), 1),
    ]
    return pairs


def _skew_pairs(ctx, op_tag, f, g, xi, basis, rep=None):
    """Pairs for the pairing identity each operator satisfies.

    The scalar operators are skew under the weighted pairing, so the residual
    is <Af, g> + <f, Ag>. The contraction D carries anti-Hermitian internal
    generators on top of the skew scalar family; the two signs cancel and D
    pairs symmetrically, so its residual is <Df, g> - <f, Dg>.
    """
    if op_tag == "dirac":
        dctx = DiracContext(ctx, basis=basis, rep=rep)
        if len(f) != dctx.internal_dim or len(g) != dctx.internal_dim:
            raise ValueError(
                f"spinor inputs need {dctx.internal_dim} components"
            )
        br = _bridge(basis)
        Fv = SectionVector([br.to_ambient(c.poly) for c in f])
        Gv = SectionVector([br.to_ambient(c.poly) for c in g])
        DF = _damped_dirac(dctx, Fv)
        DG = _damped_dirac(dctx, Gv)
        pairs = []
        for c in range(dctx.internal_dim):
            pairs.append((DF.components[c], Gv.components[c], 1))
            pairs.append((Fv.components[c], DG.components[c], -1))
        return pairs
    if op_tag not in ("dunkl", "drift"):
        raise ValueError(f"unknown operator tag {op_tag!r}")
    if xi is None:
        raise ValueError("scalar operators need a direction xi")
    fa = _lift(ctx, basis, f)
    ga = _lift(ctx, basis, g)
    return [
        (_damped_scalar(op_tag, ctx, xi, fa), ga, 1),
        (fa, _damped_scalar(op_tag, ctx, xi, ga), 1),
    ]


def _pairs_exact(ctx, pairs, basis):
    total = ExactIntegral(felem(0), Fraction(ctx.system.rank, 2))
    for A, B, sign in pairs:
        val = exact_weighted_integral(ctx, A, B, basis)
        total = total + (val if sign > 0 else -val)
    return total


def adjoint_residual_derivative(
    ctx, xi, f, g, basis=None, method=None, samples=200_000, seed=DEFAULT_SEED
):
    """Residual of the weighted adjoint of the plain derivative.

    Zero exactly when d_xi* = -d_xi - <grad log weight, xi> under the
    pairing. Exact for even nonnegative 2k; otherwise sampled (returns
    MCEstimates, one per nonvanishing component of the integrand).
    """
    basis = _default_basis(ctx, basis)
    xi = _check_direction(ctx, xi)
    pairs = _adjoint_pairs(ctx, xi, f, g, basis)
    if method is None:
        method = "exact" if ctx.k.doubled_is_even_nonneg else "mc"
    if method == "exact":
        return _pairs_exact(ctx, pairs, basis)
    return _mc_pairs(ctx, pairs, basis, samples, seed, "adjoint")


def skew_residual(
    ctx,
    op_tag,
    f,
    g,
    xi=None,
    basis=None,
    rep=None,
    method=None,
    samples=200_000,
    seed=DEFAULT_SEED,
):
    """Residual of each operator's pairing identity (see _skew_pairs).

    f, g are test functions for the scalar tags, sequences of test functions
    (one per internal component) for the contraction. Exact path for even
    nonnegative 2k, sampling otherwise; sampling is available for every
    rational k > -1/2.
    """
    basis = _default_basis(ctx, basis)
    if xi is not None:
        xi = _check_direction(ctx, xi)
    pairs = _skew_pairs(ctx, op_tag, f, g, xi, basis, rep=rep)
    if method is None:
        method = "exact" if ctx.k.doubled_is_even_nonneg else "mc"
    if method == "exact":
        return _pairs_exact(ctx, pairs, basis)
    return _mc_pairs(ctx, pairs, basis, samples, seed, f"skew:{op_tag}")


# -- Monte Carlo --------------------------------------------------------------

class _CompiledPoly:
    """Vectorized evaluator for one ambient polynomial."""

    __slots__ = ("exponents", "coeffs", "max_exp", "is_real")

    def __init__(self, poly):
        keys = sorted(poly.data, key=lambda m: (sum(m), m))
        self.exponents = np.array(keys, dtype=np.int64).reshape(
            len(keys), poly.nvars
        )
        self.coeffs = np.array(
            [FieldElem._wrap(poly.data[m]).approx() for m in keys],
            dtype=np.complex128,
        )
        self.max_exp = (
            self.exponents.max(axis=0)
            if len(keys)
            else np.zeros(poly.nvars, dtype=np.int64)
        )
        self.is_real = bool(np.all(self.coeffs.imag == 0.0))

    def eval(self, X):
        chunk = X.shape[0]
        if len(self.coeffs) == 0:
            return np.zeros(chunk, dtype=np.complex128)
        pows = []
        for v in range(X.shape[1]):
            cache = np.empty((self.max_exp[v] + 1, chunk))
            cache[0] = 1.0
            for e in range(1, self.max_exp[v] + 1):
                cache[e] = cache[e - 1] * X[:, v]
            pows.append(cache)
        out = np.zeros(chunk, dtype=np.complex128)
        for t in range(len(self.coeffs)):
            term = np.full(chunk, self.coeffs[t])
            for v in range(X.shape[1]):
                e = self.exponents[t, v]
                if e:
                    term = term * pows[v][e]
            out += term
        return out


class _CompiledPair:
    """sign * A(x) conj(B(x)) together with merged pole exponents per root."""

    __slots__ = ("num_a", "num_b_conj", "den", "sign", "is_real")

    def __init__(self, A, B, sign):
        self.num_a = _CompiledPoly(A.num)
        self.num_b_conj = _CompiledPoly(B.conj().num)
        den = {}
        for key, e in A.den.items():
            den[key] = den.get(key, 0) + e
        for key, e in B.den.items():
            den[key] = den.get(key, 0) + e
        self.den = den
        self.sign = sign
        self.is_real = self.num_a.is_real and self.num_b_conj.is_real


def _as_section(x):
    return RationalSection.from_poly(x) if isinstance(x, Polynomial) else x


def _mc_pairs(ctx, pairs, basis, samples, seed, label):
    """Estimate the signed weighted sum over `pairs` by importance sampling.

    Per sample, each pair contributes
        sign * numA numBconj * prod_roots sign(phi)^e |phi|^{2k - e}
    with e the pair's merged pole order at the root; 2k >= e keeps the
    integrand bounded near walls, and larger pole orders are refused.
    """
    two_k = float(2 * ctx.k.value)
    if 2 * ctx.k.value <= -1:
        raise ValueError("sampling needs k > -1/2 for integrability")
    compiled = [_CompiledPair(_as_section(A), _as_section(B), s) for A, B, s in pairs]
    roots = ctx.system.positive_roots
    for cp in compiled:
        for key, e in cp.den.items():
            if float(e) > two_k:
                raise ValueError(
                    "pole order exceeds the weight's vanishing order; "
                    "the sampled integrand would be unbounded"
                )
    n = ctx.system.rank
    U = np.array(
        [[c.approx().real for c in v] for v in basis.vectors], dtype=np.float64
    )
    all_real = all(cp.is_real for cp in compiled)
    rng = np.random.default_rng(stream_seed(seed, label))
    count = 0
    acc_sum = 0.0 + 0.0j
    acc_sq_re = 0.0
    acc_sq_im = 0.0
    remaining = int(samples)
    while remaining > 0:
        chunk = min(_MC_CHUNK, remaining)
        remaining -= chunk
        T = rng.standard_normal((chunk, n)) * 0.5
        X = T @ U
        phis = {}
        for root in roots:
            i, j = root.key
            phis[root.key] = X[:, i] if j == -1 else X[:, i] - X[:, j]
        total = np.zeros(chunk, dtype=np.complex128)
        for cp in compiled:
            val = cp.num_a.eval(X) * cp.num_b_conj.eval(X)
            for root in roots:
                phi = phis[root.key]
                e = cp.den.get(root.key, 0)
                factor = np.abs(phi) ** (two_k - e) if two_k != e else 1.0
                if e:
                    s = np.sign(phi) if e & 1 else 1.0
                    val = val * (s * factor)
                elif two_k:
                    val = val * factor
            total += cp.sign * val
        count += chunk
        acc_sum += total.sum()
        acc_sq_re += float(np.sum(total.real**2))
        acc_sq_im += float(np.sum(total.imag**2))
    Z = (np.pi / 2.0) ** (n / 2.0)

    def estimate(mean_part, sq_part, component):
        mean = mean_part / count
        var = max(sq_part / count - mean * mean, 0.0)
        std = (var * count / max(count - 1, 1)) ** 0.5
        return MCEstimate(
            Z * mean, Z * std / count**0.5, count, seed, component=component
        )

    out = [estimate(acc_sum.real, acc_sq_re, "re")]
    if not all_real:
        out.append(estimate(acc_sum.imag, acc_sq_im, "im"))
    return tuple(out)


def inner_product_mc(ctx, f, g, samples=200_000, seed=DEFAULT_SEED, basis=None):
    """Monte Carlo <f, g>_k for any rational k > -1/2.

    The integrand must be real valued (real coefficients after conjugation);
    complex inputs belong to the residual machinery, which tracks both
    components.
    """
    basis = _default_basis(ctx, basis)
    n = ctx.system.rank
    if f.nvars != n or g.nvars != n:
        raise ValueError("test functions must use one variable per basis vector")
    if 2 * ctx.k.value <= -1:
        raise ValueError("sampling needs k > -1/2 for integrability")
    cf = _CompiledPoly(f.poly)
    cg = _CompiledPoly(g.poly.conj())
    if not (cf.is_real and cg.is_real):
        raise ValueError("inner_product_mc expects a real-valued integrand")
    two_k = float(2 * ctx.k.value)
    roots = ctx.system.positive_roots
    U = np.array(
        [[c.approx().real for c in v] for v in basis.vectors], dtype=np.float64
    )
    rng = np.random.default_rng(stream_seed(seed, "inner_product_mc"))
    count = 0
    acc = 0.0
    acc_sq = 0.0
    remaining = int(samples)
    while remaining > 0:
        chunk = min(_MC_CHUNK, remaining)
        remaining -= chunk
        T = rng.standard_normal((chunk, n)) * 0.5
        vals = (cf.eval(T) * cg.eval(T)).real
        if two_k:
            X = T @ U
            for root in roots:
                i, j = root.key
                phi = X[:, i] if j == -1 else X[:, i] - X[:, j]
                vals = vals * np.abs(phi) ** two_k
        count += chunk
        acc += float(vals.sum())
        acc_sq += float(np.sum(vals**2))
    Z = (np.pi / 2.0) ** (n / 2.0)
    mean = acc / count
    var = max(acc_sq / count - mean * mean, 0.0)
    std = (var * count / max(count - 1, 1)) ** 0.5
    return MCEstimate(Z * mean, Z * std / count**0.5, count, seed)
