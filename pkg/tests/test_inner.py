"""Weighted Gaussian inner products: exact moment integration, the Monte
Carlo fallback, and the adjoint/skew-adjoint residual machinery."""

import math
from fractions import Fraction
from itertools import product

import pytest

import dunklops._rand as rnd
from dunklops.algebra import I, felem, sqrt_rational
from dunklops.dunkl import DunklContext
from dunklops.inner import (
    DEFAULT_SEED,
    ExactIntegral,
    GaussianTestFn,
    MCEstimate,
    adjoint_residual_derivative,
    gaussian_moment,
    inner_product_exact,
    inner_product_mc,
    skew_residual,
    stream_seed,
)
from dunklops.polyring import Polynomial
from dunklops.rootsys import Multiplicity, system_from_name

scipy_integrate = pytest.importorskip("scipy.integrate")


def ctx_for(name, k):
    system = system_from_name(name)
    return DunklContext(system, Multiplicity(system, k))


def t(i, nvars):
    return Polynomial.variable(nvars, i)


def tfn(p):
    return GaussianTestFn(p)


ONE_1D = GaussianTestFn(Polynomial.constant(1, felem(1)))
T_1D = GaussianTestFn(Polynomial.variable(1, 0))


def quad_moment(exponent):
    # even integrands only; the half-line transform reaches machine precision
    val, _ = scipy_integrate.quad(
        lambda u: u**exponent * math.exp(-(u**2)), 0, math.inf
    )
    return 2 * val


def test_moment_of_one():
    got = gaussian_moment((0,))
    assert got == ExactIntegral(felem(1), Fraction(1, 2))
    assert abs(got.approx().real - quad_moment(0)) < 1e-12


def test_moment_of_odd_power():
    assert gaussian_moment((1,)).is_zero
    assert gaussian_moment((3, 2)).is_zero


def test_moment_of_square():
    got = gaussian_moment((2,))
    assert got == ExactIntegral(felem(Fraction(1, 2)), Fraction(1, 2))
    assert abs(got.approx().real - quad_moment(2)) < 1e-12


def test_moments_against_quadrature_battery():
    for e in (4, 6, 8):
        got = gaussian_moment((e,)).approx().real
        assert abs(got - quad_moment(e)) < 1e-10 * (1 + abs(got))


def test_multivariate_moment_factorizes():
    got = gaussian_moment((2, 4))
    a = gaussian_moment((2,))
    b = gaussian_moment((4,))
    assert got.pi_power == Fraction(1)
    assert got.coeff == a.coeff * b.coeff


def test_flat_pairing_of_ones():
    ctx = ctx_for("A1", 0)
    got = inner_product_exact(ctx, ONE_1D, ONE_1D)
    assert got == ExactIntegral(sqrt_rational(Fraction(1, 2)), Fraction(1, 2))


def test_odd_pairing_vanishes():
    ctx = ctx_for("A1", 0)
    assert inner_product_exact(ctx, ONE_1D, T_1D).is_zero


def test_weighted_pairing_of_ones():
    ctx = ctx_for("A1", 1)
    got = inner_product_exact(ctx, ONE_1D, ONE_1D)
    expected = ExactIntegral(
        sqrt_rational(Fraction(1, 2)) * felem(Fraction(1, 4)), Fraction(1, 2)
    )
    assert got == expected


def test_exact_path_gate_on_half_integer_weight():
    ctx = ctx_for("A1", Fraction(1, 2))
    with pytest.raises(ValueError):
        inner_product_exact(ctx, ONE_1D, ONE_1D)


def test_hermitian_symmetry():
    ctx = ctx_for("A2", 1)
    rng = rnd.rng_for(91, "hermitian")
    for _ in range(20):
        f = tfn(rnd.random_polynomial(rng, 2, 3, gaussian_parts=True))
        g = tfn(rnd.random_polynomial(rng, 2, 3, gaussian_parts=True))
        a = inner_product_exact(ctx, f, g)
        b = inner_product_exact(ctx, g, f)
        assert a.pi_power == b.pi_power or a.is_zero
        assert a.coeff == b.coeff.conj()


def test_positivity_battery():
    rng = rnd.rng_for(92, "positivity")
    checked = 0
    for name, k in (("A1", 1), ("A2", 1), ("A2", 2)):
        ctx = ctx_for(name, k)
        n = ctx.system.ambient_dim if name == "A1" else 2
        while checked < (34 if name == "A1" else 100):
            p = rnd.random_polynomial(rng, n, 3, gaussian_parts=True)
            if p.is_zero:
                continue
            f = tfn(p)
            got = inner_product_exact(ctx, f, f)
            assert not got.is_zero
            assert got.approx().real > 0
            assert abs(got.approx().imag) < 1e-15 * got.approx().real
            checked += 1
    assert checked >= 100


def test_adjoint_residual_rank_one_example():
    ctx = ctx_for("A1", 1)
    assert adjoint_residual_derivative(ctx, (1,), ONE_1D, T_1D).is_zero


def test_adjoint_residual_flat_case():
    ctx = ctx_for("A2", 0)
    rng = rnd.rng_for(93, "adjoint-flat")
    for _ in range(8):
        f = tfn(rnd.random_polynomial(rng, 2, 3))
        g = tfn(rnd.random_polynomial(rng, 2, 3))
        xi = rnd.random_direction(rng, ctx.system)
        assert adjoint_residual_derivative(ctx, xi, f, g).is_zero


def test_adjoint_residual_weighted_random_quadratics():
    ctx = ctx_for("A2", 1)
    rng = rnd.rng_for(94, "adjoint-quad")
    for _ in range(10):
        f = tfn(rnd.random_polynomial(rng, 2, 2))
        g = tfn(rnd.random_polynomial(rng, 2, 2))
        xi = rnd.random_direction(rng, ctx.system)
        assert adjoint_residual_derivative(ctx, xi, f, g).is_zero


def test_adjoint_residual_monomial_grid():
    # every monomial pair up to degree 3, both weights, ranks 1 and 2
    for name, kv in product(("A1", "A2"), (1, 2)):
        ctx = ctx_for(name, kv)
        n = 1 if name == "A1" else 2
        monos = monomials_up_to(n, 3 if name == "A1" else 2)
        xi = (1,) if name == "A1" else (1, -1, 0)
        for mf, mg in product(monos, monos):
            res = adjoint_residual_derivative(ctx, xi, tfn(mf), tfn(mg))
            assert res.is_zero, f"{name} k={kv}: {mf} vs {mg} -> {res}"


def monomials_up_to(nvars, degree):
    out = []
    for exps in product(range(degree + 1), repeat=nvars):
        if sum(exps) <= degree:
            m = Polynomial.constant(nvars, felem(1))
            for i, e in enumerate(exps):
                for _ in range(e):
                    m = m * Polynomial.variable(nvars, i)
            out.append(m)
    return out


@pytest.mark.parametrize("op_tag", ["dunkl", "drift"])
def test_scalar_skew_residuals_vanish_exactly(op_tag):
    for name, kv in (("A1", 1), ("A2", 1), ("A2", 2)):
        ctx = ctx_for(name, kv)
        n = 1 if name == "A1" else 2
        rng = rnd.rng_for(95, f"skew-{op_tag}-{name}-{kv}")
        for _ in range(6):
            f = tfn(rnd.random_polynomial(rng, n, 3))
            g = tfn(rnd.random_polynomial(rng, n, 3))
            xi = rnd.random_direction(rng, ctx.system)
            res = skew_residual(ctx, op_tag, f, g, xi=xi)
            assert res.is_zero


def test_dirac_skew_residual_vanishes_exactly():
    ctx = ctx_for("A2", 1)
    rng = rnd.rng_for(96, "skew-dirac")
    for _ in range(4):
        F = [tfn(rnd.random_polynomial(rng, 2, 2)) for _ in range(2)]
        G = [tfn(rnd.random_polynomial(rng, 2, 2)) for _ in range(2)]
        res = skew_residual(ctx, "dirac", F, G)
        assert res.is_zero


def test_skew_residual_mc_path_within_tolerance():
    ctx = ctx_for("A1", Fraction(1, 2))
    ests = skew_residual(
        ctx, "dunkl", ONE_1D, T_1D, xi=(1,), samples=120_000, seed=DEFAULT_SEED
    )
    for est in ests:
        assert isinstance(est, MCEstimate)
        assert est.within(0.0, nsigma=4.0), f"{est}"


def test_mc_agrees_with_exact():
    cases = []
    ctx1 = ctx_for("A1", 1)
    cases.append((ctx1, ONE_1D, ONE_1D))
    cases.append((ctx1, T_1D, T_1D))
    ctx2 = ctx_for("A2", 1)
    p01 = t(0, 2)
    cases.append((ctx2, tfn(p01 + Polynomial.constant(2, felem(1))), tfn(p01)))
    for ctx, f, g in cases:
        exact = inner_product_exact(ctx, f, g).approx().real
        est = inner_product_mc(ctx, f, g, samples=150_000, seed=17)
        assert est.within(exact, nsigma=4.0), f"{est} vs {exact}"


def test_mc_odd_integrand_is_zero_mean():
    ctx = ctx_for("A1", Fraction(1, 2))
    est = inner_product_mc(ctx, ONE_1D, T_1D, samples=80_000, seed=3)
    assert est.within(0.0, nsigma=4.0)


def test_mc_error_shrinks_like_root_n():
    ctx = ctx_for("A1", Fraction(1, 2))
    f = tfn(Polynomial.variable(1, 0) + Polynomial.constant(1, felem(1)))
    ratios = []
    for seed in range(8):
        small = inner_product_mc(ctx, f, f, samples=25_000, seed=seed)
        big = inner_product_mc(ctx, f, f, samples=50_000, seed=seed + 100)
        ratios.append(big.stderr / small.stderr)
    avg = sum(ratios) / len(ratios)
    assert 0.6 <= avg <= 0.82, f"stderr ratio {avg} outside the root-2 window"


def test_mc_reproducibility():
    ctx = ctx_for("A2", Fraction(1, 2))
    f = tfn(t(0, 2) * t(1, 2))
    a = inner_product_mc(ctx, f, f, samples=40_000, seed=23)
    b = inner_product_mc(ctx, f, f, samples=40_000, seed=23)
    assert a.mean == b.mean and a.stderr == b.stderr
    c = inner_product_mc(ctx, f, f, samples=40_000, seed=24)
    assert c.mean != a.mean


def test_stream_seeds_are_label_separated():
    a = stream_seed(7, "alpha")
    b = stream_seed(7, "beta")
    c = stream_seed(8, "alpha")
    assert a.entropy != b.entropy
    assert a.entropy != c.entropy


def test_exact_integral_arithmetic_guards():
    a = ExactIntegral(felem(1), Fraction(1, 2))
    b = ExactIntegral(felem(2), Fraction(1))
    with pytest.raises(ValueError):
        a + b
    zero = ExactIntegral(felem(0), Fraction(0))
    assert (a + zero) == a


def test_complex_mc_request_rejected():
    ctx = ctx_for("A1", Fraction(1, 2))
    f = tfn(Polynomial.variable(1, 0) * I)
    with pytest.raises(ValueError):
        inner_product_mc(ctx, f, f, samples=1000, seed=1)
