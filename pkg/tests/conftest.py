"""Shared fixtures and small exact-arithmetic helpers for the test battery."""

from fractions import Fraction

import pytest

from dunklops.algebra import FieldElem, felem
from dunklops.polyring import Polynomial, RationalSection
from dunklops.rootsys import Multiplicity, Point, system_from_name

# scoreboard lines recorded by the acceptance battery; replayed after the
# run so they survive output capture
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)


@pytest.fixture(scope="session")
def A1():
    return system_from_name("A1")


@pytest.fixture(scope="session")
def A2():
    return system_from_name("A2")


@pytest.fixture(scope="session")
def A3():
    return system_from_name("A3")


def mult(system, value):
    return Multiplicity(system, Fraction(value))


def var(nvars, i):
    return Polynomial.variable(nvars, i)


def const(nvars, c):
    return Polynomial.constant(nvars, felem(c))


def section(p):
    if isinstance(p, RationalSection):
        return p
    return RationalSection.from_poly(p)


def lift_to_ambient(poly_t, basis):
    """Substitute t_a = <u_a, x> into a polynomial in orthonormal coordinates.

    Returns an ambient-coordinate Polynomial on the basis' root system.
    """
    nvars = basis.system.ambient_dim
    forms = [Polynomial.linear_form(nvars, tuple(u)) for u in basis.vectors]
    out = Polynomial.zero(nvars)
    for mono, coeff in poly_t.terms():
        term = Polynomial.constant(nvars, coeff)
        for a, e in enumerate(mono.exponents):
            for _ in range(e):
                term = term * forms[a]
        out = out + term
    return out


def assert_zero_section(s, msg=""):
    __tracebackhide__ = True
    if isinstance(s, RationalSection):
        assert s.is_zero, msg or f"expected zero section, got {s}"
    else:
        assert s.is_zero, msg or f"expected zero, got {s}"


def assert_sections_equal(a, b):
    __tracebackhide__ = True
    diff = a - b
    assert diff.is_zero, f"sections differ: {a} vs {b}"
