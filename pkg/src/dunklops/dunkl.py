"""The commuting differential-difference operators and their drift-only
companions.

For a direction xi, multiplicity k, and positive roots a:

    T_xi f  =  d_xi f  +  sum_a k(a) <a, xi> (f - f o s_a) / <a, x>
    L_xi f  =  d_xi f  +  sum_a k(a) <a, xi> f / <a, x>

T_xi maps polynomials to polynomials (each reflection difference divides
exactly); L_xi genuinely produces rational sections. Both act componentwise
on vectors of sections, which is how the Laplacian reaches spinor fields.
"""

from fractions import Fraction

from .algebra import FieldElem, felem, sqrt_rational
from .polyring import (
    Polynomial,
    RationalSection,
    SectionVector,
    directional_derivative,
    divided_difference,
)
from .rootsys import Multiplicity, Point, Root, RootSystemA, pairing

__all__ = [
    "DunklContext",
    "OrthonormalBasis",
    "dunkl_apply",
    "drift_apply",
    "dunkl_laplacian",
    "commutator",
    "laplacian_via_gram",
]


class DunklContext:
    """A root system together with its multiplicity."""

    __slots__ = ("system", "k")

    def __init__(self, system, k):
        if not isinstance(system, RootSystemA):
            raise TypeError("system must be a RootSystemA")
        self.system = system
        self.k = k if isinstance(k, Multiplicity) else Multiplicity(system, k)
        if self.k.system != system:
            raise ValueError("multiplicity belongs to a different system")

    def __repr__(self):
        return f"DunklContext(A{self.system.rank}, k={self.k.value})"


class OrthonormalBasis:
    """An exact orthonormal basis of the reflection representation.

    For rank one this is a unit vector on the line. For higher ranks the
    vectors live in the sum-zero hyperplane of the ambient space; both
    orthonormality and sum-zero membership are verified exactly on
    construction, so downstream contractions can trust the basis blindly.
    """

    __slots__ = ("system", "vectors")

    def __init__(self, system, vectors):
        vectors = tuple(tuple(felem(c) for c in v) for v in vectors)
        if len(vectors) != system.rank:
            raise ValueError("need exactly rank-many vectors")
        for v in vectors:
            if len(v) != system.ambient_dim:
                raise ValueError("ambient dimension mismatch")
            if system.rank > 1:
                total = felem(0)
                for c in v:
                    total = total + c
                if not total.is_zero:
                    raise ValueError("basis vector leaves the sum-zero hyperplane")
        for a, va in enumerate(vectors):
            for b, vb in enumerate(vectors):
                want = 1 if a == b else 0
                if pairing(va, vb) != want:
                    raise ValueError(
                        f"vectors {a} and {b} fail exact orthonormality"
                    )
        self.system = system
        self.vectors = vectors

    @classmethod
    def standard(cls, system):
        """u_a = (e_1 + ... + e_a - a e_{a+1}) / sqrt(a (a+1))."""
        if system.rank == 1:
            return cls(system, ((felem(1),),))
        m = system.ambient_dim
        vecs = []
        for a in range(1, system.rank + 1):
            scale = sqrt_rational(Fraction(1, a * (a + 1)))
            v = [felem(0)] * m
            for r in range(a):
                v[r] = scale
            v[a] = scale * (-a)
            vecs.append(tuple(v))
        return cls(system, vecs)

    @classmethod
    def alternate(cls, system):
        """A second exact basis: the standard construction run on reversed
        coordinates (rank one flips the sign)."""
        if system.rank == 1:
            return cls(system, ((felem(-1),),))
        std = cls.standard(system)
        return cls(
            system, tuple(tuple(reversed(v)) for v in std.vectors)
        )

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __eq__(self, other):
        return (
            isinstance(other, OrthonormalBasis)
            and self.system == other.system
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.system, self.vectors))

    def __repr__(self):
        return f"OrthonormalBasis(A{self.system.rank}, {len(self.vectors)} vectors)"


def _xi_seq(ctx, xi):
    if isinstance(xi, Root):
        return xi.vector
    if isinstance(xi, Point):
        return xi.coords
    xi = tuple(xi)
    if len(xi) != ctx.system.ambient_dim:
        raise ValueError("direction has wrong ambient dimension")
    return xi


def dunkl_apply(ctx, xi, f):
    """Apply T_xi. Polynomials stay polynomials; sections stay sections."""
    xi = _xi_seq(ctx, xi)
    out = directional_derivative(f, xi)
    for root in ctx.system.positive_roots:
        kv = ctx.k.of(root)
        if not kv:
            continue
        pr = pairing(root, xi)
        if pr.is_zero:
            continue
        out = out + divided_difference(root.key, f) * (felem(kv) * pr)
    return out


def drift_apply(ctx, xi, f):
    """Apply the local part L_xi = d_xi + sum_a k <a,xi> / <a,x>.

    The output is a rational section (vector of sections for vector input)
    even when f is polynomial, unless every multiplier vanishes.
    """
    xi = _xi_seq(ctx, xi)
    out = directional_derivative(f, xi)
    n = ctx.system.ambient_dim
    multiplier = RationalSection.zero(n)
    for root in ctx.system.positive_roots:
        kv = ctx.k.of(root)
        if not kv:
            continue
        pr = pairing(root, xi)
        if pr.is_zero:
            continue
        multiplier = multiplier + RationalSection(
            Polynomial.constant(n, felem(kv) * pr), {root.key: 1}
        )
    if multiplier.is_zero:
        return out
    return out + f * multiplier


def dunkl_laplacian(ctx, f, basis=None):
    """sum_a T_{u_a}^2 over an orthonormal basis (standard by default)."""
    if basis is None:
        basis = OrthonormalBasis.standard(ctx.system)
    out = None
    for u in basis:
        term = dunkl_apply(ctx, u, dunkl_apply(ctx, u, f))
        out = term if out is None else out + term
    return out


def commutator(ctx, xi, eta, f):
    """[T_xi, T_eta] f, identically zero across the whole family."""
    a = dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, f))
    b = dunkl_apply(ctx, eta, dunkl_apply(ctx, xi, f))
    return a - b


def _fraction_inverse(mat):
    n = len(mat)
    a = [[Fraction(mat[r][c]) for c in range(n)] for r in range(n)]
    inv = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return inv


def laplacian_via_gram(ctx, f):
    """Basis-free cross-check of the Laplacian: contract T_v T_w over the
    simple-root family against the inverse Gram matrix.

    Agreement with the orthonormal-basis sum is a strong independence check
    because the simple roots are neither orthogonal nor normalized.
    """
    simples = ctx.system.simple_roots
    n = len(simples)
    gram = [
        [int(pairing(a, b).as_fraction()) for b in simples] for a in simples
    ]
    ginv = _fraction_inverse(gram)
    first = [dunkl_apply(ctx, v, f) for v in simples]
    out = None
    for a in range(n):
        for b in range(n):
            c = ginv[a][b]
            if not c:
                continue
            term = dunkl_apply(ctx, simples[a], first[b]) * felem(c)
            out = term if out is None else out + term
    return out
