"""Exact scalars: Gaussian rationals extended by square roots of squarefree
integers.

Every coefficient that appears anywhere in the engine lives in this field,
closed under the ring operations and under inversion. `Rational` is the
stdlib `fractions.Fraction`, which already carries the normalization
invariants (lowest terms, positive denominator). `FieldElem` wraps the kernel
dict layout in an immutable value type.

Multiplicity parameters are rational throughout; complex multiplicities are
out of scope for this engine (the adjointness machinery conjugates only test
functions, never the weight exponents).
"""

from fractions import Fraction
from functools import lru_cache
from math import sqrt as _fsqrt

from ._backend import K

Rational = Fraction

__all__ = [
    "Rational",
    "FieldElem",
    "ZERO",
    "ONE",
    "I",
    "felem",
    "sqrt_rational",
    "parse_scalar",
    "tokenize",
    "ScalarParseError",
]


def _triple_from_fractions(re, im):
    q = re.denominator * im.denominator // _gcd2(re.denominator, im.denominator)
    return K.g_make(re.numerator * (q // re.denominator),
                    im.numerator * (q // im.denominator), q)


def _gcd2(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _prime_factors(d):
    """Prime factors of a squarefree positive integer, as a tuple."""
    out = []
    f = 2
    while f * f <= d:
        if d % f == 0:
            out.append(f)
            d //= f
        f += 1 if f == 2 else 2
    if d > 1:
        out.append(d)
    return tuple(out)


class FieldElem:
    """Immutable element of Q(i, sqrt(d1), sqrt(d2), ...).

    Stored as the kernel field dict; construct through the classmethods or
    module helpers rather than the raw constructor.
    """

    __slots__ = ("_data",)

    def __init__(self, data, _raw=False):
        if not _raw:
            raise TypeError("use FieldElem.from_rational / felem / sqrt_rational")
        self._data = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def _wrap(cls, data):
        self = cls.__new__(cls)
        self._data = data
        return self

    @classmethod
    def from_int(cls, n):
        return cls._wrap({1: (n, 0, 1)} if n else {})

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        if r == 0:
            return cls._wrap({})
        return cls._wrap({1: K.g_make(r.numerator, 0, r.denominator)})

    @classmethod
    def from_gaussian(cls, re, im):
        t = _triple_from_fractions(Fraction(re), Fraction(im))
        if t[0] == 0 and t[1] == 0:
            return cls._wrap({})
        return cls._wrap({1: t})

    # -- structure ---------------------------------------------------------

    @property
    def data(self):
        return self._data

    @property
    def is_zero(self):
        return not self._data

    @property
    def is_rational(self):
        d = self._data
        if not d:
            return True
        return set(d) == {1} and d[1][1] == 0

    def terms(self):
        """Mapping radicand -> (real, imag) Fraction pair, rational part at 1."""
        return {
            d: (Fraction(a, q), Fraction(b, q))
            for d, (a, b, q) in sorted(self._data.items())
        }

    def as_fraction(self):
        if not self._data:
            return Fraction(0)
        if not self.is_rational:
            raise ValueError(f"not a rational value: {self}")
        a, _, q = self._data[1]
        return Fraction(a, q)

    def conj(self):
        return FieldElem._wrap(K.fe_conj(self._data))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem._wrap(K.fe_add(self._data, other._data))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem._wrap(K.fe_sub(self._data, other._data))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem._wrap(K.fe_sub(other._data, self._data))

    def __neg__(self):
        return FieldElem._wrap(K.fe_neg(self._data))

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem._wrap(K.fe_mul(self._data, other._data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        """Exact reciprocal.

        Multiplying by every sign-flip conjugate (one flip pattern per
        nonempty subset of the primes under the radicals) lands the product in
        the Gaussian rationals, where inversion is elementary. Radical counts
        stay tiny in practice, so the 2^p - 1 products are cheap.
        """
        data = self._data
        if not data:
            raise ZeroDivisionError("reciprocal of zero")
        primes = set()
        for d in data:
            primes.update(_prime_factors(d))
        primes = sorted(primes)
        numer = None
        for mask in range(1, 1 << len(primes)):
            flipped = {}
            for d, c in data.items():
                parity = 0
                for idx, p in enumerate(primes):
                    if (mask >> idx) & 1 and d % p == 0:
                        parity ^= 1
                flipped[d] = K.g_neg(c) if parity else c
            numer = flipped if numer is None else K.fe_mul(numer, flipped)
        if numer is None:
            # no radicals present: plain Gaussian-rational reciprocal
            return FieldElem._wrap({1: K.g_inv(data[1])})
        rat = K.fe_mul(data, numer)
        if set(rat) != {1}:
            raise ArithmeticError("conjugate product failed to rationalize")
        return FieldElem._wrap(K.fe_scale(numer, K.g_inv(rat[1])))

    # -- numeric -----------------------------------------------------------

    def approx(self):
        """Complex float approximation (exact up to a few ulp)."""
        total = 0j
        for d, (a, b, q) in self._data.items():
            root = 1.0 if d == 1 else _cached_sqrt(d)
            total += complex(a / q, b / q) * root
        return total

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __bool__(self):
        return bool(self._data)

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self._data:
            return "0"
        pieces = []
        for d, (a, b, q) in sorted(self._data.items()):
            if a:
                pieces.append(_render_term(a, q, False, d))
            if b:
                pieces.append(_render_term(b, q, True, d))
        sign0, body0 = pieces[0]
        text = ("-" if sign0 < 0 else "") + body0
        for sign, body in pieces[1:]:
            text += (" - " if sign < 0 else " + ") + body
        return text

    __repr__ = __str__


@lru_cache(maxsize=None)
def _cached_sqrt(d):
    return _fsqrt(d)


def _render_term(num, den, has_i, d):
    """One grammar term: [int][*i][*sqrt(d)][/den]. Returns (sign, text)."""
    sign = -1 if num < 0 else 1
    num = abs(num)
    factors = []
    if num != 1 or (not has_i and d == 1):
        factors.append(str(num))
    if has_i:
        factors.append("i")
    if d != 1:
        factors.append(f"sqrt({d})")
    text = "*".join(factors)
    if den != 1:
        text += f"/{den}"
    return (sign, text)


ZERO = FieldElem._wrap({})
ONE = FieldElem._wrap({1: (1, 0, 1)})
I = FieldElem._wrap({1: (0, 1, 1)})


def felem(x):
    """Coerce an int, Fraction, or FieldElem into a FieldElem."""
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, int):
        return FieldElem.from_int(x)
    if isinstance(x, Fraction):
        return FieldElem.from_rational(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a field element")


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, int):
        return FieldElem.from_int(x)
    if isinstance(x, Fraction):
        return FieldElem.from_rational(x)
    return None


def sqrt_rational(r):
    """Exact square root of a nonnegative rational, as a FieldElem.

    sqrt(p/q) = sqrt(p q)/q; the square part of p q is pulled out front and
    the squarefree remainder becomes the radicand.
    """
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative radicand")
    if r == 0:
        return ZERO
    m = r.numerator * r.denominator
    s, d = K._split_square(m)
    return FieldElem._wrap({d: K.g_make(s, 0, r.denominator)})


# -- scalar expression grammar ------------------------------------------------

class ScalarParseError(ValueError):
    pass


def tokenize(text):
    """Shared tokenizer for scalar and polynomial expressions.

    Token kinds: INT, NAME (identifiers such as i, sqrt, x3), OP (one of
    + - * / ^ ( ) ,).
    """
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            out.append(("INT", int(text[start:pos])))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            out.append(("NAME", text[start:pos]))
            continue
        if ch in "+-*/^(),":
            out.append(("OP", ch))
            pos += 1
            continue
        raise ScalarParseError(f"unexpected character {ch!r} at position {pos}")
    out.append(("END", None))
    return out


class _ScalarParser:
    """Recursive-descent parser for signed sums of products.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' INT]
    atom   := INT | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'
    """

    def __init__(self, tokens):
        self.tokens = tokens
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
                value = value / rhs if val == "/" else value * rhs
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
            return FieldElem.from_int(val)
        if kind == "NAME":
            if val == "i":
                return I
            if val == "sqrt":
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return _sqrt_elem(inner)
            raise ScalarParseError(f"unknown name {val!r} in scalar expression")
        if kind == "OP" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ScalarParseError(f"unexpected token {val!r}")


def _sqrt_elem(value):
    try:
        return sqrt_rational(value.as_fraction())
    except ValueError as exc:
        raise ScalarParseError(f"sqrt argument must be a nonnegative rational: {exc}")


def parse_scalar(text):
    """Parse the scalar grammar: signed sums of [rational][*i][*sqrt(d)] terms.

    Examples: ``3/2``, ``i``, ``sqrt(3)/2``, ``1/2 - 3*i*sqrt(6)/2``.
    """
    value = _ScalarParser(tokenize(text)).parse()
    return value
