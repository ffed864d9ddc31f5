"""Exact Clifford generators and the flat Dirac contraction.

Generators satisfy e_a e_b + e_b e_a = -2 delta_ab Id with e_a^dagger = -e_a,
realized as i times the standard Hermitian gamma construction: interleaved
tensor strings of the three two-by-two involutions. Entries stay in
{0, +-1, +-i}, so every identity downstream is exact.

The flat operator here acts on spinor fields over R^n in plain coordinates,
one variable per generator: D F = sum_a e_a d_a F, and D(DF) = -(sum d_a^2) F.
"""

from .algebra import I, felem
from ._matrix import kron, mat_dagger, mat_from_rows, mat_identity, mat_mul, mat_neg, mat_scale
from .polyring import SectionVector

__all__ = [
    "CliffordGens",
    "SpinorField",
    "make_generators",
    "flat_dirac_apply",
    "spinor_add",
    "matrix_action",
]

_PAULI_X = ((felem(0), felem(1)), (felem(1), felem(0)))
_PAULI_Y = ((felem(0), -I), (I, felem(0)))
_PAULI_Z = ((felem(1), felem(0)), (felem(0), felem(-1)))


class SpinorField(SectionVector):
    """Vector of sections carrying the spinor index."""


class CliffordGens:
    """n anti-Hermitian generators on the 2^ceil(n/2)-dimensional spinor
    space. Construction re-verifies every anticommutation relation and the
    adjoint convention, so a successfully built object is proof of both."""

    __slots__ = ("n", "dim", "matrices")

    def __init__(self, n, matrices):
        matrices = tuple(mat_from_rows(m) for m in matrices)
        if len(matrices) != n:
            raise ValueError("generator count mismatch")
        dim = 1 << ((n + 1) // 2)
        for m in matrices:
            if len(m) != dim:
                raise ValueError(f"spinor dimension must be {dim} for n={n}")
        ident = mat_identity(dim)
        minus_two = mat_scale(ident, -2)
        zero = mat_scale(ident, 0)
        for a in range(n):
            if mat_dagger(matrices[a]) != mat_neg(matrices[a]):
                raise ValueError(f"generator {a} is not anti-Hermitian")
            for b in range(a, n):
                anti = _anticommutator(matrices[a], matrices[b])
                want = minus_two if a == b else zero
                if anti != want:
                    raise ValueError(
                        f"generators {a}, {b} fail the anticommutation relation"
                    )
        self.n = n
        self.dim = dim
        self.matrices = matrices

    def __getitem__(self, a):
        return self.matrices[a]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"CliffordGens(n={self.n}, dim={self.dim})"


def _anticommutator(a, b):
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(ab, ba)
    )


def make_generators(n):
    """Build the n generators: gamma_{2j-1}, gamma_{2j} carry Z and X at
    tensor slot j behind a prefix of Ys, and e_a = i gamma_a."""
    if n < 1:
        raise ValueError("need at least one generator")
    m = (n + 1) // 2
    mats = []
    for a in range(1, n + 1):
        j = (a + 1) // 2
        head = _PAULI_Z if a % 2 == 1 else _PAULI_X
        factors = [_PAULI_Y] * (j - 1) + [head] + [mat_identity(2)] * (m - j)
        gamma = factors[0]
        for f in factors[1:]:
            gamma = kron(gamma, f)
        mats.append(mat_scale(gamma, I))
    return CliffordGens(n, mats)


def flat_dirac_apply(gens, F):
    """D F = sum_a e_a d_a F on spinor fields over R^n, one coordinate per
    generator."""
    if not isinstance(F, SectionVector):
        raise TypeError("expected a spinor field")
    if F.dim != gens.dim:
        raise ValueError("spinor dimension mismatch")
    if F.nvars != gens.n:
        raise ValueError("flat fields use one coordinate per generator")
    out = None
    for a in range(gens.n):
        xi = [0] * gens.n
        xi[a] = 1
        term = F.directional_derivative(xi).matrix_action(gens[a])
        out = term if out is None else out + term
    return SpinorField(out.components)


def spinor_add(F, G):
    return F + G


def matrix_action(mat, F):
    """Left action of a constant matrix on a spinor field."""
    return F.matrix_action(mat)
