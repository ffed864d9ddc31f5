"""Exact Clifford generators and the flat first-order operator built on them."""

from fractions import Fraction

import pytest

import dunklops._rand as rnd
from dunklops._matrix import mat_dagger, mat_from_rows, mat_identity, mat_mul, mat_neg
from dunklops.algebra import I, felem
from dunklops.clifford import (
    SpinorField,
    flat_dirac_apply,
    make_generators,
    matrix_action,
    spinor_add,
)
from dunklops.polyring import Polynomial, RationalSection


def x(i, nvars):
    return Polynomial.variable(nvars, i)


def sec(p):
    return RationalSection.from_poly(p)


def zero_field(gens, nvars):
    return SpinorField(
        [sec(Polynomial.zero(nvars)) for _ in range(gens.dim)]
    )


def rand_field(rng, gens, nvars, degree=3):
    return SpinorField(
        [sec(rnd.random_polynomial(rng, nvars, degree)) for _ in range(gens.dim)]
    )


def test_rank_one_generator_matrix():
    gens = make_generators(1)
    zero = felem(0)
    assert gens.dim == 2
    assert gens.matrices[0] == mat_from_rows([[I, zero], [zero, -I]])


def test_rank_one_generator_squares_to_minus_identity():
    gens = make_generators(1)
    e1 = gens.matrices[0]
    assert mat_mul(e1, e1) == mat_neg(mat_identity(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_anticommutation_relations(n):
    gens = make_generators(n)
    assert gens.dim == 2 ** ((n + 1) // 2)
    minus_two_id = mat_neg(
        mat_from_rows(
            [[felem(2 if i == j else 0) for j in range(gens.dim)] for i in range(gens.dim)]
        )
    )
    for a, ea in enumerate(gens.matrices):
        for b, eb in enumerate(gens.matrices):
            anticomm = mat_from_rows(
                [
                    [u + v for u, v in zip(row1, row2)]
                    for row1, row2 in zip(mat_mul(ea, eb), mat_mul(eb, ea))
                ]
            )
            if a == b:
                assert anticomm == minus_two_id
            else:
                assert all(c.is_zero for row in anticomm for c in row)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_generators_are_anti_hermitian(n):
    gens = make_generators(n)
    for e in gens.matrices:
        assert mat_dagger(e) == mat_neg(e)


def test_flat_operator_kills_constants():
    gens = make_generators(2)
    F = SpinorField(
        [sec(Polynomial.constant(2, felem(c))) for c in (3, -1)]
    )
    assert flat_dirac_apply(gens, F).is_zero


def test_flat_operator_rank_one_example():
    gens = make_generators(1)
    F = SpinorField([sec(x(0, 1)), sec(Polynomial.zero(1))])
    got = flat_dirac_apply(gens, F)
    assert (got.components[0] - sec(Polynomial.constant(1, I))).is_zero
    assert got.components[1].is_zero


@pytest.mark.parametrize("n", [1, 2, 3])
def test_flat_square_is_minus_laplacian(n):
    gens = make_generators(n)
    rng = rnd.rng_for(71, f"flat-square-{n}")
    for _ in range(6):
        F = rand_field(rng, gens, n)
        dd = flat_dirac_apply(gens, flat_dirac_apply(gens, F))
        for c_dd, c_f in zip(dd.components, F.components):
            lap = RationalSection.zero(n)
            for i in range(n):
                lap = lap + c_f.directional_derivative(
                    tuple(1 if j == i else 0 for j in range(n))
                ).directional_derivative(tuple(1 if j == i else 0 for j in range(n)))
            assert (c_dd + lap).is_zero


def test_matrix_action_identity():
    gens = make_generators(2)
    rng = rnd.rng_for(72, "mat-id")
    F = rand_field(rng, gens, 2)
    got = matrix_action(mat_identity(gens.dim), F)
    for a, b in zip(got.components, F.components):
        assert (a - b).is_zero


def test_generator_acts_as_square_root_of_minus_one():
    gens = make_generators(2)
    rng = rnd.rng_for(73, "mat-sq")
    F = rand_field(rng, gens, 2)
    e1 = gens.matrices[0]
    twice = matrix_action(e1, matrix_action(e1, F))
    for a, b in zip(twice.components, F.components):
        assert (a + b).is_zero


def test_spinor_addition_with_zero():
    gens = make_generators(3)
    rng = rnd.rng_for(74, "spinor-add")
    F = rand_field(rng, gens, 3)
    got = spinor_add(zero_field(gens, 3), F)
    for a, b in zip(got.components, F.components):
        assert (a - b).is_zero


def test_dimension_mismatch_rejected():
    gens = make_generators(2)
    F = SpinorField([sec(Polynomial.zero(2))])  # wrong component count
    with pytest.raises(ValueError):
        matrix_action(gens.matrices[0], F)
