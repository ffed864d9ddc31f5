"""The Dirac contraction of the commuting family and its square identity.

With an orthonormal basis u_1..u_n of the reflection representation and
Clifford generators e_1..e_n acting on the spinor factor,

    D F = sum_a (e_a (x) Id) T_{u_a} F,         D (D F) = -Delta F,

where T is the (possibly representation-twisted) operator family and Delta is
that same family's Laplacian sum_a T_{u_a}^2. Internal indices are laid out
spinor-major: component c = s * rep.dim + r.
"""

from ._matrix import kron, mat_identity, mat_mul, mat_is_identity, mat_neg
from .clifford import SpinorField, make_generators
from .dunkl import DunklContext, OrthonormalBasis, dunkl_apply
from .polyring import SectionVector
from .reps import builtin_rep, twisted_apply_with
from .rootsys import pairing

__all__ = [
    "DiracContext",
    "dirac_dunkl_apply",
    "dirac_laplacian",
    "dirac_square_residual",
    "laplacian_decomposition_residual",
    "basis_invariance_check",
]


class DiracContext:
    """Bundles the operator family with its Clifford and internal data."""

    def __init__(self, ctx, gens=None, basis=None, rep=None):
        if not isinstance(ctx, DunklContext):
            raise TypeError("ctx must be a DunklContext")
        rank = ctx.system.rank
        self.ctx = ctx
        self.gens = gens if gens is not None else make_generators(rank)
        if self.gens.n != rank:
            raise ValueError("need one Clifford generator per basis direction")
        self.basis = (
            basis if basis is not None else OrthonormalBasis.standard(ctx.system)
        )
        if self.basis.system != ctx.system:
            raise ValueError("basis belongs to a different system")
        self.rep = rep if rep is not None else builtin_rep(ctx.system, "trivial")
        if self.rep.system != ctx.system:
            raise ValueError("representation belongs to a different system")
        self.spinor_dim = self.gens.dim
        self.internal_dim = self.gens.dim * self.rep.dim
        self._cliff_full = None
        self._twist_cache = {}

    def clifford_action(self, a):
        """e_a acting on the full internal space (spinor factor)."""
        if self._cliff_full is None:
            ident = mat_identity(self.rep.dim)
            self._cliff_full = tuple(
                kron(self.gens[b], ident) for b in range(self.gens.n)
            )
        return self._cliff_full[a]

    def twist_matrix(self, root):
        """rho(s_a) acting on the full internal space (internal factor)."""
        m = self._twist_cache.get(root.key)
        if m is None:
            m = kron(mat_identity(self.spinor_dim), self.rep.reflection_matrix(root))
            self._twist_cache[root.key] = m
        return m

    def twisted_apply(self, xi, F):
        return twisted_apply_with(self.ctx, xi, F, self.twist_matrix)

    def __repr__(self):
        return (
            f"DiracContext(A{self.ctx.system.rank}, k={self.ctx.k.value}, "
            f"rep={self.rep.name or self.rep.dim})"
        )


def _check_field(dctx, F):
    if not isinstance(F, SectionVector):
        raise TypeError("expected a spinor field")
    if F.dim != dctx.internal_dim:
        raise ValueError(
            f"field has {F.dim} components, internal space has {dctx.internal_dim}"
        )


def dirac_dunkl_apply(dctx, F):
    """D F = sum_a (e_a (x) Id) T_{u_a} F."""
    _check_field(dctx, F)
    out = None
    for a, u in enumerate(dctx.basis):
        term = dctx.twisted_apply(u, F).matrix_action(dctx.clifford_action(a))
        out = term if out is None else out + term
    return SpinorField(out.components)


def dirac_laplacian(dctx, F):
    """The family's own Laplacian sum_a T_{u_a}^2 F (no Clifford factors)."""
    _check_field(dctx, F)
    out = None
    for u in dctx.basis:
        term = dctx.twisted_apply(u, dctx.twisted_apply(u, F))
        out = term if out is None else out + term
    return SpinorField(out.components)


def dirac_square_residual(dctx, F):
    """D(D F) + Delta F; the square identity holds exactly when this is the
    zero vector."""
    return dirac_dunkl_apply(dctx, dirac_dunkl_apply(dctx, F)) + dirac_laplacian(
        dctx, F
    )


def laplacian_decomposition_residual(dctx, F):
    """Isolate the scalar half of the square identity: the diagonal square
    sum computed through the vector machinery minus the same sum assembled
    componentwise through the scalar operators. Identically zero for the
    trivial twist; meaningful as a plumbing check, not an identity of the
    contraction."""
    if dctx.rep.dim != 1 or dctx.rep.gen_images[0][0][0] != 1:
        raise ValueError("decomposition check is defined for the trivial twist")
    _check_field(dctx, F)
    vector_path = dirac_laplacian(dctx, F)
    comps = []
    for c in F.components:
        acc = None
        for u in dctx.basis:
            term = dunkl_apply(dctx.ctx, u, dunkl_apply(dctx.ctx, u, c))
            acc = term if acc is None else acc + term
        comps.append(acc)
    return vector_path - SpinorField(comps)


def _diag_flip_pattern(dctx, basis2):
    """If basis2 = (eps_1 u_1, ..., eps_n u_n) with eps in {+-1}, return the
    eps tuple, else None."""
    eps = []
    for v, u in zip(basis2.vectors, dctx.basis.vectors):
        p = pairing(v, u)
        if p == 1:
            eps.append(1)
        elif p == -1:
            eps.append(-1)
        else:
            return None
    # exact match of the flipped vectors, not just of diagonal pairings
    for e, v, u in zip(eps, basis2.vectors, dctx.basis.vectors):
        target = tuple(c if e == 1 else -c for c in u)
        if tuple(v) != target:
            return None
    return tuple(eps)


def basis_invariance_check(dctx, F, basis2):
    """Verify D transforms by conjugation with the spin lift under a basis
    change in the rotation group.

    Supported changes: diagonal sign patterns with an even number of flips
    (compositions of half-turns in coordinate planes of the basis). The lift
    of a half-turn in the (a, b) plane is e_a e_b, so the expected identity is
    D' = S D S^{-1} with S the product over flipped pairs. Returns True when
    the identity holds exactly; raises on unsupported basis changes.
    """
    _check_field(dctx, F)
    eps = _diag_flip_pattern(dctx, basis2)
    if eps is None:
        raise ValueError(
            "basis change is outside the supported family "
            "(diagonal sign flips of the context basis)"
        )
    flipped = [a for a, e in enumerate(eps) if e == -1]
    if len(flipped) % 2 != 0:
        raise ValueError(
            "odd sign patterns reverse orientation and have no spin lift here"
        )
    n = dctx.internal_dim
    lift = mat_identity(n)
    lift_inv = mat_identity(n)
    for a, b in zip(flipped[::2], flipped[1::2]):
        pair = mat_mul(dctx.clifford_action(a), dctx.clifford_action(b))
        lift = mat_mul(lift, pair)
        lift_inv = mat_mul(mat_neg(pair), lift_inv)
    if not mat_is_identity(mat_mul(lift, lift_inv)):
        raise AssertionError("spin lift inversion failed")
    dctx2 = DiracContext(dctx.ctx, gens=dctx.gens, basis=basis2, rep=dctx.rep)
    direct = dirac_dunkl_apply(dctx2, F)
    conjugated = dirac_dunkl_apply(
        dctx, F.matrix_action(lift_inv)
    ).matrix_action(lift)
    return direct == conjugated
