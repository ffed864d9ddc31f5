"""Deterministic random inputs for the verification suites.

Streams derive from (seed, label) so every suite draws independently and
reruns reproduce byte-identical inputs regardless of execution order.
"""

import numpy as np

from .algebra import I, felem
from .inner import stream_seed
from .polyring import Polynomial, SectionVector


def rng_for(seed, label):
    return np.random.default_rng(stream_seed(seed, label))


def random_polynomial(rng, nvars, degree, terms=6, coeff_bound=4, gaussian_parts=False):
    """Sparse random polynomial with small integer (or Gaussian integer)
    coefficients; may collapse below `terms` through collisions."""
    out = Polynomial.zero(nvars)
    for _ in range(terms):
        total = int(rng.integers(0, degree + 1))
        exps = [0] * nvars
        for v in rng.integers(0, nvars, size=total):
            exps[int(v)] += 1
        c = int(rng.integers(-coeff_bound, coeff_bound + 1)) or 1
        coeff = felem(c)
        if gaussian_parts:
            coeff = coeff + I * felem(int(rng.integers(-coeff_bound, coeff_bound + 1)))
        term = Polynomial.constant(nvars, coeff)
        for v, e in enumerate(exps):
            if e:
                term = term * Polynomial.variable(nvars, v) ** e
        out = out + term
    return out


def random_vector_field(rng, nvars, dim, degree, terms=4, coeff_bound=3):
    return SectionVector(
        [
            random_polynomial(rng, nvars, degree, terms=terms, coeff_bound=coeff_bound)
            for _ in range(dim)
        ]
    )


def random_direction(rng, system):
    """Nonzero integer direction inside the reflection representation."""
    roots = system.positive_roots
    while True:
        coeffs = rng.integers(-2, 3, size=len(roots))
        vec = [0] * system.ambient_dim
        for c, root in zip(coeffs, roots):
            if c:
                for i, r in enumerate(root.vector):
                    vec[i] += int(c) * r
        if any(vec):
            return tuple(vec)
