"""Finite-dimensional unitary representations of the reflection group and the
representation-twisted operators.

A vector-valued function glued by rho transforms as Phi(w x) = rho(w) Phi(x);
the twisted operator replaces the scalar reflection difference with

    T_xi Phi = d_xi Phi + sum_a k(a) <a, xi> (Phi - rho(s_a) Phi o s_a) / <a, x>.

Away from the trivial representation the reflection term need not vanish on
the hyperplane, so outputs are vectors of rational sections with at most
simple poles along the arrangement.
"""

from .algebra import Rational, felem, sqrt_rational
from ._matrix import (
    mat_dagger,
    mat_from_rows,
    mat_identity,
    mat_is_identity,
    mat_mul,
)
from .polyring import SectionVector, directional_derivative
from .rootsys import pairing
from .dunkl import _xi_seq

__all__ = [
    "Representation",
    "VectorField",
    "builtin_rep",
    "rho_of_reflection",
    "twisted_apply_with",
    "twisted_dunkl_apply",
    "twisted_commutator",
    "check_equivariance",
]


class VectorField(SectionVector):
    """Vector of sections carrying a representation's internal index."""


class Representation:
    """Generator images of a unitary representation.

    The constructor proves the data consistent: every generator image must be
    unitary and an involution, adjacent images must satisfy the braid
    relation, and non-adjacent images must commute. Those relations present
    the group, so any word product is well defined afterwards.
    """

    def __init__(self, system, gen_images, name=None):
        gen_images = tuple(mat_from_rows(m) for m in gen_images)
        expected = 1 if system.rank == 1 else system.rank
        if len(gen_images) != expected:
            raise ValueError(
                f"expected {expected} generator images, got {len(gen_images)}"
            )
        dim = len(gen_images[0])
        for idx, m in enumerate(gen_images):
            if len(m) != dim:
                raise ValueError("generator images differ in size")
            if not mat_is_identity(mat_mul(mat_dagger(m), m)):
                raise ValueError(f"generator image {idx} is not unitary")
            if not mat_is_identity(mat_mul(m, m)):
                raise ValueError(f"generator image {idx} is not an involution")
        for a in range(len(gen_images)):
            for b in range(a + 1, len(gen_images)):
                ma, mb = gen_images[a], gen_images[b]
                if b == a + 1:
                    lhs = mat_mul(ma, mat_mul(mb, ma))
                    rhs = mat_mul(mb, mat_mul(ma, mb))
                    if lhs != rhs:
                        raise ValueError(
                            f"braid relation fails for generators {a}, {b}"
                        )
                else:
                    if mat_mul(ma, mb) != mat_mul(mb, ma):
                        raise ValueError(
                            f"distant generators {a}, {b} fail to commute"
                        )
        self.system = system
        self.gen_images = gen_images
        self.dim = dim
        self.name = name
        self._reflection_cache = {}

    @property
    def is_trivial(self):
        return all(mat_is_identity(m) for m in self.gen_images)

    def of_word(self, word):
        out = mat_identity(self.dim)
        for g in word:
            out = mat_mul(out, self.gen_images[g])
        return out

    def of(self, w):
        return self.of_word(w.word)

    def reflection_matrix(self, root):
        m = self._reflection_cache.get(root.key)
        if m is None:
            elem = self.system.reflection_element(root)
            m = self.of_word(elem.word)
            self._reflection_cache[root.key] = m
        return m

    def __repr__(self):
        label = self.name or f"dim {self.dim}"
        return f"Representation({label}, A{self.system.rank})"


def builtin_rep(system, name):
    """Built-in representations: trivial, sign, permutation, and (rank two
    only) irrep2d, the two-dimensional reflection representation."""
    count = 1 if system.rank == 1 else system.rank
    if name == "trivial":
        return Representation(system, [((1,),)] * count, name="trivial")
    if name == "sign":
        return Representation(system, [((-1,),)] * count, name="sign")
    if name == "permutation":
        # the ambient coordinate action of the generators
        return Representation(
            system,
            [
                tuple(
                    tuple(
                        (1 if g.signs[r] == 1 else -1) if g.perm[r] == c else 0
                        for c in range(system.ambient_dim)
                    )
                    for r in range(system.ambient_dim)
                )
                for g in system.generators()
            ],
            name="permutation",
        )
    if name == "irrep2d":
        if system.rank != 2:
            raise ValueError("irrep2d is the rank-two reflection representation")
        half = Rational(1, 2)
        r3h = sqrt_rational(3) * half
        m1 = ((felem(1), felem(0)), (felem(0), felem(-1)))
        m2 = ((-half, r3h), (r3h, half))
        return Representation(system, [m1, m2], name="irrep2d")
    raise ValueError(
        f"unknown representation {name!r} "
        "(expected trivial, sign, permutation, or irrep2d)"
    )


def rho_of_reflection(rep, root):
    """Image of the reflection at a root, computed through its reduced word."""
    return rep.reflection_matrix(root)


def twisted_apply_with(ctx, xi, F, matrix_for_root):
    """Shared core of every twisted application: the reflection term uses
    whatever internal matrix `matrix_for_root` assigns to each root."""
    if not isinstance(F, SectionVector):
        raise TypeError("twisted operators act on vector fields")
    xi = _xi_seq(ctx, xi)
    out = directional_derivative(F, xi)
    for root in ctx.system.positive_roots:
        kv = ctx.k.of(root)
        if not kv:
            continue
        pr = pairing(root, xi)
        if pr.is_zero:
            continue
        elem = ctx.system.reflection_element(root)
        moved = F.compose_signed(elem.perm, elem.signs).matrix_action(
            matrix_for_root(root)
        )
        out = out + (F - moved).div_by_form(root.key) * (felem(kv) * pr)
    return out


def twisted_dunkl_apply(ctx, rep, xi, F):
    """Apply the rho-twisted operator to a vector of sections."""
    if F.dim != rep.dim:
        raise ValueError(
            f"field has {F.dim} components, representation has {rep.dim}"
        )
    return twisted_apply_with(ctx, xi, F, rep.reflection_matrix)


def twisted_commutator(ctx, rep, xi, eta, F):
    a = twisted_dunkl_apply(ctx, rep, xi, twisted_dunkl_apply(ctx, rep, eta, F))
    b = twisted_dunkl_apply(ctx, rep, eta, twisted_dunkl_apply(ctx, rep, xi, F))
    return a - b


def check_equivariance(rep, F, w):
    """Does F satisfy the glue rule F(w x) = rho(w) F(x)?"""
    moved = F.compose_signed(w.perm, w.signs)
    return moved == F.matrix_action(rep.of(w))
