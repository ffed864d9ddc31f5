"""Reflection arrangements of symmetric-group type.

``RootSystemA(n)`` is the coordinate-difference arrangement: for n >= 2 the
ambient space is R^{n+1} with positive roots e_i - e_j (i < j) and the
symmetric group permuting coordinates; the rank-one system lives on the line
with the single root 1 and the sign flip. Group elements are stored as signed
row arrays acting by (w x)_r = signs[r] * x_{perm[r]}, together with a
shortest generator word found by breadth-first enumeration.

The multiplicity is one rational value per conjugacy class of reflections;
type A has a single class, and the constructor enforces that.
"""

from fractions import Fraction
from functools import lru_cache

from .algebra import FieldElem, Rational, felem
from .polyring import Polynomial, RationalSection, form_polynomial

__all__ = [
    "Root",
    "RootSystemA",
    "GroupElement",
    "Multiplicity",
    "Point",
    "WallPoleError",
    "system_from_name",
    "reflect",
    "pairing",
    "weight_eval",
    "weight_poly",
    "grad_log_weight",
    "chamber_contains",
    "enumerate_group",
]


class WallPoleError(ZeroDivisionError):
    """Weight evaluation at a reflection hyperplane with a negative exponent."""


class Root:
    """A positive root: an integer ambient vector plus its denominator key."""

    __slots__ = ("vector", "key")

    def __init__(self, vector, key):
        self.vector = tuple(int(v) for v in vector)
        self.key = key

    @property
    def norm_sq(self):
        return sum(v * v for v in self.vector)

    def __eq__(self, other):
        return isinstance(other, Root) and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        i, j = self.key
        if j == -1:
            return f"Root(x{i + 1})"
        return f"Root(e{i + 1}-e{j + 1})"


class GroupElement:
    """Signed permutation with a reduced generator word.

    Multiplication composes maps: (w1 * w2)(x) = w1(w2(x)). Words concatenate
    the same way, leftmost factor applied last to the argument's coordinates.
    """

    __slots__ = ("perm", "signs", "word")

    def __init__(self, perm, signs, word=()):
        self.perm = tuple(perm)
        self.signs = tuple(signs)
        self.word = tuple(word)

    @classmethod
    def identity(cls, dim):
        return cls(range(dim), (1,) * dim, ())

    @property
    def dim(self):
        return len(self.perm)

    @property
    def is_identity(self):
        return self.perm == tuple(range(self.dim)) and all(
            s == 1 for s in self.signs
        )

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        p1, s1 = self.perm, self.signs
        p2, s2 = other.perm, other.signs
        perm = tuple(p2[p1[j]] for j in range(self.dim))
        signs = tuple(s1[j] * s2[p1[j]] for j in range(self.dim))
        return GroupElement(perm, signs, self.word + other.word)

    def inverse(self):
        perm = [0] * self.dim
        signs = [1] * self.dim
        for j, p in enumerate(self.perm):
            perm[p] = j
            signs[p] = self.signs[j]
        return GroupElement(perm, signs, tuple(reversed(self.word)))

    def act_vector(self, vec):
        """Apply to an ambient tuple of scalars: (w v)_r = signs[r] v[perm[r]]."""
        return tuple(
            v if s == 1 else -v
            for s, v in zip(self.signs, (vec[p] for p in self.perm))
        )

    def __call__(self, x):
        if isinstance(x, Point):
            return Point(self.act_vector(x.coords))
        return self.act_vector(tuple(x))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.perm == other.perm and self.signs == other.signs

    def __hash__(self):
        return hash((self.perm, self.signs))

    def __repr__(self):
        if not self.word:
            return "GroupElement(id)"
        return "GroupElement(" + "*".join(f"s{g + 1}" for g in self.word) + ")"


class RootSystemA:
    """The type-A arrangement of the given rank (1 through 6)."""

    MAX_RANK = 6

    def __init__(self, rank):
        if not 1 <= rank <= self.MAX_RANK:
            raise ValueError(f"rank must be between 1 and {self.MAX_RANK}")
        self.rank = rank
        if rank == 1:
            self.ambient_dim = 1
            self.positive_roots = (Root((1,), (0, -1)),)
        else:
            m = rank + 1
            self.ambient_dim = m
            roots = []
            for i in range(m):
                for j in range(i + 1, m):
                    vec = [0] * m
                    vec[i] = 1
                    vec[j] = -1
                    roots.append(Root(vec, (i, j)))
            self.positive_roots = tuple(roots)

    @property
    def simple_roots(self):
        if self.rank == 1:
            return self.positive_roots
        return tuple(
            r for r in self.positive_roots if r.key[1] == r.key[0] + 1
        )

    def generators(self):
        """The simple reflections, with one-letter words."""
        if self.rank == 1:
            return [GroupElement((0,), (-1,), (0,))]
        out = []
        for g in range(self.rank):
            perm = list(range(self.ambient_dim))
            perm[g], perm[g + 1] = perm[g + 1], perm[g]
            out.append(GroupElement(perm, (1,) * self.ambient_dim, (g,)))
        return out

    def reflection_element(self, root):
        """The reflection fixing the root's hyperplane, with a reduced word.

        For the root e_i - e_j the palindrome word
        s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i realizes the transposition.
        """
        i, j = root.key
        if j == -1:
            return GroupElement((0,), (-1,), (0,))
        word = tuple(range(i, j - 1)) + tuple(range(j - 1, i - 1, -1))
        perm = list(range(self.ambient_dim))
        perm[i], perm[j] = perm[j], perm[i]
        return GroupElement(perm, (1,) * self.ambient_dim, word)

    def root_by_key(self, key):
        for r in self.positive_roots:
            if r.key == key:
                return r
        raise KeyError(key)

    def __eq__(self, other):
        return isinstance(other, RootSystemA) and self.rank == other.rank

    def __hash__(self):
        return hash(("A", self.rank))

    def __repr__(self):
        return f"RootSystemA({self.rank})"


def system_from_name(name):
    """Resolve selector strings A1 through A6."""
    name = name.strip().upper()
    if len(name) == 2 and name[0] == "A" and name[1].isdigit():
        return RootSystemA(int(name[1]))
    raise ValueError(f"unknown system selector {name!r} (expected A1..A6)")


class Multiplicity:
    """Reflection multiplicity: constant on conjugacy classes, and type A has
    a single class, so one rational value covers every root."""

    __slots__ = ("system", "value")

    def __init__(self, system, value):
        self.system = system
        if isinstance(value, (list, tuple, set)):
            vals = {Fraction(v) for v in value}
            if len(vals) != 1:
                raise ValueError(
                    "multiplicity must take a single value on the unique "
                    "class of reflections"
                )
            value = vals.pop()
        self.value = Fraction(value)

    def of(self, root):
        return self.value

    @property
    def is_zero(self):
        return self.value == 0

    @property
    def doubled_is_even_nonneg(self):
        two_k = 2 * self.value
        return two_k.denominator == 1 and two_k.numerator >= 0 and two_k.numerator % 2 == 0

    def __repr__(self):
        return f"Multiplicity(A{self.system.rank}, k={self.value})"


class Point:
    """Ambient point with exact coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(felem(c) for c in coords)

    @property
    def dim(self):
        return len(self.coords)

    def approx(self):
        return tuple(c.approx() for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"


def _as_scalar_seq(x):
    if isinstance(x, Point):
        return x.coords
    if isinstance(x, Root):
        return x.vector
    return tuple(x)


def pairing(u, v):
    """Standard ambient inner product; accepts roots, points, or sequences."""
    uu = _as_scalar_seq(u)
    vv = _as_scalar_seq(v)
    if len(uu) != len(vv):
        raise ValueError("dimension mismatch")
    total = felem(0)
    for a, b in zip(uu, vv):
        total = total + felem_like(a) * felem_like(b)
    return total


def felem_like(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return felem(x)
    raise TypeError(f"cannot pair {type(x).__name__}")


def reflect(x, root):
    """Reflect across the root's hyperplane: x - (2<a,x>/<a,a>) a."""
    pt = x if isinstance(x, Point) else Point(x)
    coeff = pairing(root, pt) * Fraction(2, root.norm_sq)
    coords = [
        c - coeff * v if v else c for c, v in zip(pt.coords, root.vector)
    ]
    return Point(coords)


def _float_coords(x):
    if isinstance(x, Point):
        out = []
        for c in x.coords:
            z = c.approx()
            if abs(z.imag) > 1e-12 * (1 + abs(z.real)):
                raise ValueError("weight evaluation needs real coordinates")
            out.append(z.real)
        return out
    return [float(c) for c in x]


def weight_eval(k, x):
    """Numeric value of prod |<a, x>|^{2k} at a real ambient point.

    Zero exponents contribute 1 even on walls (the zero-multiplicity weight
    is Lebesgue); negative exponents on a wall are a genuine pole.
    """
    coords = _float_coords(x)
    two_k = float(2 * k.value)
    total = 1.0
    for root in k.system.positive_roots:
        v = sum(coords[r] * c for r, c in enumerate(root.vector) if c)
        if v == 0.0:
            if two_k == 0.0:
                continue
            if two_k < 0.0:
                raise WallPoleError(
                    f"point lies on the wall of {root!r} and 2k < 0"
                )
            return 0.0
        total *= abs(v) ** two_k
    return total


def weight_poly(k):
    """The weight as an exact polynomial; requires 2k a nonnegative even
    integer so that each |form|^{2k} is the polynomial form^{2k}."""
    if not k.doubled_is_even_nonneg:
        raise ValueError(
            f"weight is polynomial only for even nonnegative 2k, got 2k={2 * k.value}"
        )
    system = k.system
    e = int(2 * k.value)
    out = Polynomial.constant(system.ambient_dim, 1)
    if e == 0:
        return out
    for root in system.positive_roots:
        out = out * form_polynomial(system.ambient_dim, root.key) ** e
    return out


def grad_log_weight(k):
    """Gradient of log of the weight: component r is sum_a 2k a_r / <a, x>.

    Returned as one rational section per ambient coordinate.
    """
    system = k.system
    n = system.ambient_dim
    two_k = 2 * k.value
    out = []
    for r in range(n):
        acc = RationalSection.zero(n)
        if two_k:
            for root in system.positive_roots:
                c = root.vector[r]
                if c:
                    acc = acc + RationalSection(
                        Polynomial.constant(n, two_k * c), {root.key: 1}
                    )
        out.append(acc)
    return tuple(out)


def chamber_contains(system, x):
    """Strict positivity of every positive-root pairing."""
    coords = _float_coords(x)
    for root in system.positive_roots:
        v = sum(coords[r] * c for r, c in enumerate(root.vector) if c)
        if v <= 0.0:
            return False
    return True


@lru_cache(maxsize=None)
def _enumerate_cached(rank):
    system = RootSystemA(rank)
    gens = system.generators()
    ident = GroupElement.identity(system.ambient_dim)
    seen = {(ident.perm, ident.signs): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = w * g
                key = (cand.perm, cand.signs)
                if key not in seen:
                    seen[key] = cand
                    nxt.append(cand)
        frontier = nxt
    out = sorted(seen.values(), key=lambda w: (len(w.word), w.word))
    return tuple(out)


def enumerate_group(system, bound=RootSystemA.MAX_RANK):
    """All group elements with reduced words, breadth-first so each element
    keeps a shortest generator word. Refuses ranks above the bound (the
    order grows factorially)."""
    if system.rank > bound:
        raise ValueError(
            f"rank {system.rank} exceeds the enumeration bound {bound}"
        )
    return list(_enumerate_cached(system.rank))
