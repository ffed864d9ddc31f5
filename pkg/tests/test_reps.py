"""Unitary reflection-group representations and the matrix-twisted operator."""

from fractions import Fraction

import pytest

import dunklops._rand as rnd
from dunklops._matrix import mat_dagger, mat_from_rows, mat_identity, mat_mul
from dunklops.algebra import felem, sqrt_rational
from dunklops.dunkl import DunklContext, dunkl_apply
from dunklops.polyring import Polynomial, RationalSection
from dunklops.reps import (
    Representation,
    VectorField,
    builtin_rep,
    check_equivariance,
    rho_of_reflection,
    twisted_commutator,
    twisted_dunkl_apply,
)
from dunklops.rootsys import Multiplicity, enumerate_group, system_from_name

HALF = felem(Fraction(1, 2))
ROOT3_HALF = sqrt_rational(Fraction(3, 4))

REP_NAMES = ("trivial", "sign", "permutation", "irrep2d")


def ctx_for(name, k):
    system = system_from_name(name)
    return DunklContext(system, Multiplicity(system, k))


def x(i, nvars):
    return Polynomial.variable(nvars, i)


def sec(p):
    return RationalSection.from_poly(p)


def vandermonde(nvars):
    out = Polynomial.constant(nvars, felem(1))
    for i in range(nvars):
        for j in range(i + 1, nvars):
            out = out * (x(i, nvars) - x(j, nvars))
    return out


def test_two_dimensional_irrep_matrices():
    rep = builtin_rep(system_from_name("A2"), "irrep2d")
    one, zero = felem(1), felem(0)
    assert rep.gen_images[0] == mat_from_rows([[one, zero], [zero, -one]])
    assert rep.gen_images[1] == mat_from_rows(
        [[-HALF, ROOT3_HALF], [ROOT3_HALF, HALF]]
    )


def test_word_conjugated_third_reflection():
    A2 = system_from_name("A2")
    rep = builtin_rep(A2, "irrep2d")
    got = rho_of_reflection(rep, A2.root_by_key((0, 2)))
    expected = mat_from_rows([[-HALF, -ROOT3_HALF], [-ROOT3_HALF, HALF]])
    assert got == expected


def test_sign_rep_sends_every_reflection_to_minus_one():
    A3 = system_from_name("A3")
    rep = builtin_rep(A3, "sign")
    for root in A3.positive_roots:
        assert rho_of_reflection(rep, root) == mat_from_rows([[felem(-1)]])


def test_trivial_rep_is_identically_one():
    A2 = system_from_name("A2")
    rep = builtin_rep(A2, "trivial")
    assert rep.is_trivial
    for root in A2.positive_roots:
        assert rho_of_reflection(rep, root) == mat_from_rows([[felem(1)]])


def test_permutation_rep_reflection_is_the_swap_matrix():
    A2 = system_from_name("A2")
    rep = builtin_rep(A2, "permutation")
    got = rho_of_reflection(rep, A2.root_by_key((0, 1)))
    one, zero = felem(1), felem(0)
    assert got == mat_from_rows(
        [[zero, one, zero], [one, zero, zero], [zero, zero, one]]
    )


def test_irrep2d_requires_rank_two():
    with pytest.raises(ValueError):
        builtin_rep(system_from_name("A3"), "irrep2d")


def test_unknown_rep_name_rejected():
    with pytest.raises(ValueError):
        builtin_rep(system_from_name("A2"), "spinor")


def test_construction_rejects_non_involutions():
    A2 = system_from_name("A2")
    one, zero = felem(1), felem(0)
    shear = mat_from_rows([[one, one], [zero, one]])
    flip = mat_from_rows([[one, zero], [zero, -one]])
    with pytest.raises(ValueError):
        Representation(A2, (shear, flip))


def test_construction_rejects_broken_braid_relation():
    A2 = system_from_name("A2")
    one, zero = felem(1), felem(0)
    # each factor is a unitary involution but the pair fails the braid relation
    m1 = mat_from_rows([[one, zero], [zero, -one]])
    m2 = mat_from_rows([[zero, one], [one, zero]])
    with pytest.raises(ValueError):
        Representation(A2, (m1, m2))


def test_homomorphism_on_random_word_pairs():
    rng = rnd.rng_for(61, "rep-hom")
    for name in ("A1", "A2", "A3", "A4"):
        system = system_from_name(name)
        group = enumerate_group(system)
        reps = ["trivial", "sign", "permutation"]
        if name == "A2":
            reps.append("irrep2d")
        for rep_name in reps:
            rep = builtin_rep(system, rep_name)
            for _ in range(special_pair_count(name)):
                w1 = group[int(rng.integers(len(group)))]
                w2 = group[int(rng.integers(len(group)))]
                assert rep.of(w1 * w2) == mat_mul(rep.of(w1), rep.of(w2))


def special_pair_count(name):
    return {"A1": 10, "A2": 40, "A3": 40, "A4": 25}[name]


def test_unitarity_over_the_whole_group():
    for name in ("A1", "A2", "A3"):
        system = system_from_name(name)
        for rep_name in ("trivial", "sign", "permutation") + (
            ("irrep2d",) if name == "A2" else ()
        ):
            rep = builtin_rep(system, rep_name)
            for w in enumerate_group(system):
                m = rep.of(w)
                assert mat_mul(mat_dagger(m), m) == mat_identity(rep.dim)


def test_trivial_twist_matches_scalar_operator():
    ctx = ctx_for("A2", Fraction(3, 2))
    rep = builtin_rep(ctx.system, "trivial")
    rng = rnd.rng_for(62, "trivial-twist")
    for _ in range(10):
        f = rnd.random_polynomial(rng, 3, 4)
        xi = rnd.random_direction(rng, ctx.system)
        twisted = twisted_dunkl_apply(ctx, rep, xi, VectorField([sec(f)]))
        scalar = dunkl_apply(ctx, xi, f)
        diff = twisted.components[0] - scalar
        assert diff.is_zero


def test_sign_twist_on_odd_coordinate():
    k = Fraction(4, 3)
    ctx = ctx_for("A1", k)
    rep = builtin_rep(ctx.system, "sign")
    got = twisted_dunkl_apply(ctx, rep, (1,), VectorField([sec(x(0, 1))]))
    expected = sec(Polynomial.constant(1, felem(1)))
    assert (got.components[0] - expected).is_zero


def test_sign_twist_on_constant_produces_simple_pole():
    k = Fraction(4, 3)
    ctx = ctx_for("A1", k)
    rep = builtin_rep(ctx.system, "sign")
    got = twisted_dunkl_apply(
        ctx, rep, (1,), VectorField([sec(Polynomial.constant(1, felem(1)))])
    )
    expected = (
        Polynomial.constant(1, felem(2 * k)).as_section().div_by_form((0, -1))
    )
    assert (got.components[0] - expected).is_zero


def test_equivariance_of_alternating_polynomial_under_sign():
    A2 = system_from_name("A2")
    rep = builtin_rep(A2, "sign")
    F = VectorField([sec(vandermonde(3))])
    for w in enumerate_group(A2):
        assert check_equivariance(rep, F, w)


def test_equivariance_of_symmetric_polynomial_under_trivial():
    A2 = system_from_name("A2")
    rep = builtin_rep(A2, "trivial")
    F = VectorField([sec(x(0, 3) + x(1, 3) + x(2, 3))])
    for w in enumerate_group(A2):
        assert check_equivariance(rep, F, w)


def test_non_equivariant_input_detected():
    A2 = system_from_name("A2")
    rep = builtin_rep(A2, "trivial")
    F = VectorField([sec(x(0, 3))])
    s12 = A2.reflection_element(A2.root_by_key((0, 1)))
    assert not check_equivariance(rep, F, s12)


@pytest.mark.parametrize("rep_name", REP_NAMES)
def test_twisted_commutators_vanish(rep_name):
    ctx = ctx_for("A2", Fraction(3, 2))
    rep = builtin_rep(ctx.system, rep_name)
    rng = rnd.rng_for(63, f"twist-comm-{rep_name}")
    for _ in range(6):
        F = VectorField(
            [sec(rnd.random_polynomial(rng, 3, 3)) for _ in range(rep.dim)]
        )
        xi = rnd.random_direction(rng, ctx.system)
        eta = rnd.random_direction(rng, ctx.system)
        assert twisted_commutator(ctx, rep, xi, eta, F).is_zero


def test_twisted_laplacian_preserves_equivariance():
    # frame-contracted second-order operator applied to equivariant inputs
    from dunklops.dunkl import OrthonormalBasis

    ctx = ctx_for("A2", Fraction(1, 2))
    basis = OrthonormalBasis.standard(ctx.system)
    cases = [
        ("sign", vandermonde(3)),
        ("trivial", x(0, 3) * x(1, 3) + x(1, 3) * x(2, 3) + x(0, 3) * x(2, 3)),
    ]
    for rep_name, poly in cases:
        rep = builtin_rep(ctx.system, rep_name)
        F = VectorField([sec(poly)])
        lap = None
        for u in basis.vectors:
            step = twisted_dunkl_apply(ctx, rep, u, twisted_dunkl_apply(ctx, rep, u, F))
            lap = step if lap is None else VectorField(
                [a + b for a, b in zip(lap.components, step.components)]
            )
        for w in enumerate_group(ctx.system):
            assert check_equivariance(rep, lap, w)
