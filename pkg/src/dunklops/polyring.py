"""Sparse polynomials and rational sections over the exact scalar field.

The coordinate ring is Q(i, sqrt(*))[x1..xm] in ambient coordinates. Rational
sections restrict denominators to products of the arrangement's linear forms
(coordinate differences ``x_i - x_j`` and, for the rank-one system on the
line, the single coordinate ``x_1``), which is exactly the shape
differential-difference operators produce. Sections keep their numerator
coprime to every denominator form; since the forms are prime elements of a
UFD, that normal form is unique, so structural equality is semantic equality.

Denominator keys: ``(i, j)`` with ``i < j`` is the form ``x_i - x_j``;
``(i, -1)`` is the form ``x_i``. Exponents are positive ints.
"""

from fractions import Fraction

from ._backend import K
from .algebra import I, FieldElem, ScalarParseError, felem, tokenize, sqrt_rational

__all__ = [
    "Monomial",
    "Polynomial",
    "RationalSection",
    "SectionVector",
    "PoleError",
    "directional_derivative",
    "compose_group",
    "divided_difference",
    "parse_poly",
]


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero of a denominator form."""


class Monomial:
    __slots__ = ("exponents",)

    def __init__(self, exponents):
        self.exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def degree(self):
        return sum(self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __str__(self):
        parts = [
            f"x{i + 1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(self.exponents)
            if e
        ]
        return "*".join(parts) if parts else "1"

    __repr__ = __str__


def _monomial_sort_key(m):
    return (-sum(m), tuple(-e for e in m))


class Polynomial:
    """Immutable sparse polynomial; `data` is the kernel poly dict."""

    __slots__ = ("nvars", "data")

    def __init__(self, nvars, data=None, _raw=False):
        self.nvars = nvars
        if data is None:
            self.data = {}
        elif _raw:
            self.data = data
        else:
            clean = {}
            for m, c in data.items():
                exps = tuple(int(e) for e in m)
                if len(exps) != nvars:
                    raise ValueError("monomial arity mismatch")
                c = felem(c)
                if not c.is_zero:
                    clean[exps] = c.data
            self.data = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {}, _raw=True)

    @classmethod
    def constant(cls, nvars, value):
        value = felem(value)
        if value.is_zero:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: value.data}, _raw=True)

    @classmethod
    def variable(cls, nvars, i):
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        m = tuple(1 if r == i else 0 for r in range(nvars))
        return cls(nvars, {m: {1: K.G_ONE}}, _raw=True)

    @classmethod
    def linear_form(cls, nvars, coeffs):
        """sum_i coeffs[i] * x_i for scalar coefficients."""
        data = {}
        for i, c in enumerate(coeffs):
            c = felem(c)
            if not c.is_zero:
                m = tuple(1 if r == i else 0 for r in range(nvars))
                data[m] = c.data
        return cls(nvars, data, _raw=True)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.data

    @property
    def degree(self):
        if not self.data:
            return -1
        return max(sum(m) for m in self.data)

    def terms(self):
        """Sorted (Monomial, FieldElem) pairs, highest degree first."""
        return [
            (Monomial(m), FieldElem._wrap(self.data[m]))
            for m in sorted(self.data, key=_monomial_sort_key)
        ]

    def coefficient(self, m):
        if isinstance(m, Monomial):
            m = m.exponents
        c = self.data.get(tuple(m))
        return FieldElem._wrap(c) if c is not None else FieldElem._wrap({})

    def conj(self):
        return Polynomial(
            self.nvars, {m: K.fe_conj(c) for m, c in self.data.items()}, _raw=True
        )

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, (int, Fraction, FieldElem)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.nvars, K.p_add(self.data, other.data), _raw=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.nvars, K.p_sub(self.data, other.data), _raw=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.nvars, K.p_sub(other.data, self.data), _raw=True)

    def __neg__(self):
        return Polynomial(self.nvars, K.p_neg(self.data), _raw=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            u = felem(other)
            return Polynomial(self.nvars, K.p_scale(self.data, u.data), _raw=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.nvars, K.p_mul(self.data, other.data), _raw=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def diff(self, i):
        return Polynomial(self.nvars, K.p_diff(self.data, i), _raw=True)

    def compose_signed(self, perm, signs):
        return Polynomial(
            self.nvars, K.p_compose(self.data, tuple(perm), tuple(signs)), _raw=True
        )

    def evaluate(self, coords):
        if len(coords) != self.nvars:
            raise ValueError("point arity mismatch")
        cs = [felem(c).data for c in coords]
        return FieldElem._wrap(K.p_eval(self.data, cs))

    def as_section(self):
        return RationalSection(self, {}, _normalized=True)

    # -- comparisons / rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.data == other.data

    def __hash__(self):
        return hash(
            (self.nvars, frozenset((m, frozenset(c.items())) for m, c in self.data.items()))
        )

    def __str__(self):
        if not self.data:
            return "0"
        chunks = []
        for m in sorted(self.data, key=_monomial_sort_key):
            coeff = FieldElem._wrap(self.data[m])
            mono = str(Monomial(m))
            sign, body = _coeff_text(coeff, mono)
            chunks.append((sign, body))
        sign0, body0 = chunks[0]
        text = ("-" if sign0 < 0 else "") + body0
        for sign, body in chunks[1:]:
            text += (" - " if sign < 0 else " + ") + body
        return text

    __repr__ = __str__


def _coeff_text(coeff, mono):
    """Render coeff*mono as (sign, body) with the sign pulled out when the
    coefficient is a single grammar term."""
    s = str(coeff)
    negated = False
    if s.startswith("-") and " " not in s:
        negated = True
        s = s[1:]
    multi = " " in s
    if mono == "1":
        body = f"({s})" if multi else s
        return (-1 if negated else 1, body)
    if multi:
        return (1, f"({s})*{mono}")
    if s == "1":
        return (-1 if negated else 1, mono)
    return (-1 if negated else 1, f"{s}*{mono}")


def _canon_den_key(key):
    i, j = key
    if j == -1:
        return (i, -1), 1
    if i == j:
        raise ValueError("degenerate form")
    if i < j:
        return (i, j), 1
    return (j, i), -1


def form_polynomial(nvars, key):
    """The linear form behind a denominator key, as a Polynomial."""
    i, j = key
    if j == -1:
        return Polynomial.variable(nvars, i)
    return Polynomial.variable(nvars, i) - Polynomial.variable(nvars, j)


class RationalSection:
    """num / prod(form^e), numerator coprime to every denominator form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den, _normalized=False):
        if not isinstance(num, Polynomial):
            raise TypeError("numerator must be a Polynomial")
        if _normalized:
            self.num = num
            self.den = dict(den)
            return
        canon = {}
        flip = 1
        for key, e in den.items():
            e = int(e)
            if e <= 0:
                raise ValueError("denominator exponents must be positive")
            k2, sgn = _canon_den_key(key)
            canon[k2] = canon.get(k2, 0) + e
            if sgn < 0 and (e & 1):
                flip = -flip
        if flip < 0:
            num = -num
        self.num, self.den = _normalize(num, canon)

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def from_poly(cls, p):
        return cls(p, {}, _normalized=True)

    @classmethod
    def zero(cls, nvars):
        return cls(Polynomial.zero(nvars), {}, _normalized=True)

    @classmethod
    def constant(cls, nvars, value):
        return cls(Polynomial.constant(nvars, value), {}, _normalized=True)

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_polynomial(self):
        return not self.den

    def as_polynomial(self):
        if self.den:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def conj(self):
        return RationalSection(self.num.conj(), self.den, _normalized=True)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalSection):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch")
            return RationalSection.from_poly(other)
        if isinstance(other, (int, Fraction, FieldElem)):
            return RationalSection.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        keys = set(self.den) | set(other.den)
        lcm = {k: max(self.den.get(k, 0), other.den.get(k, 0)) for k in keys}
        a = _scale_up(self.num, self.den, lcm)
        b = _scale_up(other.num, other.den, lcm)
        return RationalSection(a + b, lcm)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RationalSection(-self.num, self.den, _normalized=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            num = self.num * other
            if num.is_zero:
                return RationalSection.zero(self.nvars)
            return RationalSection(num, self.den, _normalized=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        den = dict(self.den)
        for k, e in other.den.items():
            den[k] = den.get(k, 0) + e
        return RationalSection(self.num * other.num, den)

    __rmul__ = __mul__

    def div_by_form(self, key):
        """Divide by one arrangement form (denominator exponent bump)."""
        key, sgn = _canon_den_key(key)
        den = dict(self.den)
        den[key] = den.get(key, 0) + 1
        num = -self.num if sgn < 0 else self.num
        return RationalSection(num, den)

    def compose_signed(self, perm, signs):
        num = self.num.compose_signed(perm, signs)
        den = {}
        flip = 1
        for (i, j), e in self.den.items():
            if j == -1:
                key2 = (perm[i], -1)
                sgn = signs[i]
            else:
                a, sa = perm[i], signs[i]
                b, sb = perm[j], signs[j]
                if sa != sb:
                    raise ValueError("form image leaves the arrangement")
                if a < b:
                    key2, sgn = (a, b), sa
                else:
                    key2, sgn = (b, a), -sa
            den[key2] = e
            if sgn < 0 and (e & 1):
                flip = -flip
        if flip < 0:
            num = -num
        return RationalSection(num, den, _normalized=True)

    def directional_derivative(self, xi):
        return directional_derivative(self, xi)

    def evaluate(self, coords):
        bottom = FieldElem._wrap({1: K.G_ONE})
        for key, e in self.den.items():
            v = form_polynomial(self.nvars, key).evaluate(coords)
            if v.is_zero:
                raise PoleError(f"point lies on a zero of {_form_text(key)}")
            bottom = bottom * v ** e
        return self.num.evaluate(coords) / bottom

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem, Polynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalSection):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, frozenset(self.den.items())))

    def __str__(self):
        if not self.den:
            return str(self.num)
        top = str(self.num)
        if " " in top:
            top = f"({top})"
        factors = []
        for key in sorted(self.den):
            e = self.den[key]
            base = _form_text(key)
            if key[1] != -1:
                base = f"({base})"
            factors.append(base + (f"^{e}" if e > 1 else ""))
        if len(factors) == 1 and "^" not in factors[0]:
            return f"{top}/{factors[0]}"
        return f"{top}/({'*'.join(factors)})"

    __repr__ = __str__


def _form_text(key):
    i, j = key
    if j == -1:
        return f"x{i + 1}"
    return f"x{i + 1}-x{j + 1}"


def _scale_up(num, den, target):
    for key, e in target.items():
        gap = e - den.get(key, 0)
        if gap:
            num = num * form_polynomial(num.nvars, key) ** gap
    return num


def _normalize(num, den):
    """Cancel denominator forms that divide the numerator exactly.

    The forms are non-associate primes, so cancellation order is irrelevant
    and the result is the unique normal form.
    """
    if num.is_zero:
        return num, {}
    out = {}
    for (i, j), e in den.items():
        data = num.data
        while e > 0:
            q = K.p_div_linear(data, i, j)
            if q is None:
                break
            data = q
            e -= 1
        num = Polynomial(num.nvars, data, _raw=True)
        if e:
            out[(i, j)] = e
    return num, out


class SectionVector:
    """Fixed-length tuple of rational sections sharing one coordinate ring."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = []
        for c in components:
            if isinstance(c, Polynomial):
                c = RationalSection.from_poly(c)
            if not isinstance(c, RationalSection):
                raise TypeError("components must be sections or polynomials")
            comps.append(c)
        if not comps:
            raise ValueError("empty vector")
        n = comps[0].nvars
        if any(c.nvars != n for c in comps):
            raise ValueError("arity mismatch across components")
        self.components = tuple(comps)

    @classmethod
    def zero(cls, nvars, dim):
        return cls([RationalSection.zero(nvars)] * dim)

    @property
    def dim(self):
        return len(self.components)

    @property
    def nvars(self):
        return self.components[0].nvars

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.components)

    def __add__(self, other):
        if not isinstance(other, SectionVector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return type(self)(
            [a + b for a, b in zip(self.components, other.components)]
        )

    def __sub__(self, other):
        if not isinstance(other, SectionVector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return type(self)(
            [a - b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self):
        return type(self)([-a for a in self.components])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem, Polynomial, RationalSection)):
            return type(self)([a * other for a in self.components])
        return NotImplemented

    __rmul__ = __mul__

    def matrix_action(self, mat):
        """Apply a constant matrix (rows of scalar entries) on the left."""
        if len(mat) != self.dim or any(len(row) != self.dim for row in mat):
            raise ValueError("matrix shape mismatch")
        out = []
        for row in mat:
            acc = RationalSection.zero(self.nvars)
            for entry, comp in zip(row, self.components):
                entry = felem(entry)
                if not entry.is_zero and not comp.is_zero:
                    acc = acc + comp * entry
            out.append(acc)
        return type(self)(out)

    def compose_signed(self, perm, signs):
        return type(self)([c.compose_signed(perm, signs) for c in self.components])

    def div_by_form(self, key):
        return type(self)([c.div_by_form(key) for c in self.components])

    def directional_derivative(self, xi):
        return type(self)([directional_derivative(c, xi) for c in self.components])

    def evaluate(self, coords):
        return [c.evaluate(coords) for c in self.components]

    def __eq__(self, other):
        if not isinstance(other, SectionVector):
            return NotImplemented
        return self.components == other.components

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    __repr__ = __str__


# -- operator-facing helpers --------------------------------------------------

def directional_derivative(f, xi):
    """Derivative along the constant direction xi (one scalar per ambient
    coordinate)."""
    if isinstance(f, SectionVector):
        return f.directional_derivative(xi)
    xi = [felem(c) for c in xi]
    if isinstance(f, Polynomial):
        if len(xi) != f.nvars:
            raise ValueError("direction arity mismatch")
        data = {}
        for i, c in enumerate(xi):
            if not c.is_zero:
                data = K.p_add(data, K.p_scale(K.p_diff(f.data, i), c.data))
        return Polynomial(f.nvars, data, _raw=True)
    if not isinstance(f, RationalSection):
        raise TypeError("expected polynomial, section, or vector")
    if len(xi) != f.nvars:
        raise ValueError("direction arity mismatch")
    # quotient rule, one pole bump per denominator form; the constructor
    # re-normalizes since differentiating the numerator can introduce a factor
    result = RationalSection(directional_derivative(f.num, xi), f.den)
    for key, e in f.den.items():
        c = _form_derivative(key, xi)
        if c.is_zero:
            continue
        den = dict(f.den)
        den[key] = e + 1
        result = result + RationalSection(f.num * (felem(-e) * c), den)
    return result


def _form_derivative(key, xi):
    i, j = key
    if j == -1:
        return xi[i]
    return xi[i] - xi[j]


def compose_group(w, f):
    """Precompose with a group element: returns the function x -> f(w x).

    Accepts anything exposing `perm` and `signs` row arrays. Note the
    contravariance: compose_group(w1, compose_group(w2, f)) equals
    compose_group(w2 * w1, f).
    """
    return f.compose_signed(tuple(w.perm), tuple(w.signs))


def divided_difference(key, f):
    """(f - f o s) / form, for the reflection s fixing the form's hyperplane.

    Polynomial in, polynomial out (the numerator vanishes on the hyperplane);
    sections stay sections.
    """
    key, _ = _canon_den_key(key)
    i, j = key
    if isinstance(f, Polynomial):
        n = f.nvars
        perm, signs = _reflection_arrays(n, i, j)
        diff = K.p_sub(f.data, K.p_compose(f.data, perm, signs))
        q = K.p_div_linear(diff, i, j)
        if q is None:
            raise ArithmeticError("reflection difference must divide exactly")
        return Polynomial(n, q, _raw=True)
    if isinstance(f, (RationalSection, SectionVector)):
        n = f.nvars
        perm, signs = _reflection_arrays(n, i, j)
        return (f - f.compose_signed(perm, signs)).div_by_form(key)
    raise TypeError("expected polynomial, section, or vector")


def _reflection_arrays(n, i, j):
    perm = list(range(n))
    signs = [1] * n
    if j == -1:
        signs[i] = -1
    else:
        perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm), tuple(signs)


# -- polynomial grammar -------------------------------------------------------

class _PolyParser:
    """Same shape as the scalar parser, with variables x1..xm as atoms.

    Division requires a constant divisor; exponents are literal nonnegative
    integers.
    """

    def __init__(self, tokens, nvars):
        self.tokens = tokens
        self.nvars = nvars
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, val = self.take()
        if kind != "OP" or val != ch:
            raise ScalarParseError(f"expected {ch!r}, got {val!r}")

    def parse(self):
        value = self.expr()
        kind, val = self.peek()
        if kind != "END":
            raise ScalarParseError(f"trailing input at {val!r}")
        return value

    def expr(self):
        kind, val = self.peek()
        negate = False
        if kind == "OP" and val in "+-":
            self.take()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val = self.peek()
            if kind == "OP" and val in "+-":
                self.take()
                rhs = self.term()
                value = value - rhs if val == "-" else value + rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "OP" and val in "*/":
                self.take()
                rhs = self.factor()
                if val == "/":
                    if rhs.degree > 0:
                        raise ScalarParseError(
                            "division by a nonconstant is outside the grammar"
                        )
                    c = rhs.coefficient((0,) * self.nvars)
                    value = value * c.inv()
                else:
                    value = value * rhs
            else:
                return value

    def factor(self):
        value = self.atom()
        kind, val = self.peek()
        if kind == "OP" and val == "^":
            self.take()
            kind, exp = self.take()
            if kind != "INT":
                raise ScalarParseError("exponent must be a literal integer")
            value = value ** exp
        return value

    def atom(self):
        kind, val = self.take()
        if kind == "INT":
            return Polynomial.constant(self.nvars, val)
        if kind == "NAME":
            if val == "i":
                return Polynomial.constant(self.nvars, I)
            if val == "sqrt":
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                if inner.degree > 0:
                    raise ScalarParseError("sqrt argument must be constant")
                c = inner.coefficient((0,) * self.nvars)
                return Polynomial.constant(
                    self.nvars, sqrt_rational(c.as_fraction())
                )
            if val == "x" and self.nvars == 1:
                return Polynomial.variable(1, 0)
            if val.startswith("x") and val[1:].isdigit():
                idx = int(val[1:])
                if not 1 <= idx <= self.nvars:
                    raise ScalarParseError(
                        f"variable {val} out of range for {self.nvars} coordinates"
                    )
                return Polynomial.variable(self.nvars, idx - 1)
            raise ScalarParseError(f"unknown name {val!r}")
        if kind == "OP" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ScalarParseError(f"unexpected token {val!r}")


def parse_poly(text, nvars):
    """Parse ``2*x1^2*x2 - sqrt(3)/2*x3`` style expressions."""
    return _PolyParser(tokenize(text), nvars).parse()
