"""Low-level exact arithmetic kernels.

Three nested layers share fixed plain-data layouts so the compiled twin
(`_kernels_cy.pyx`) can mirror this module function for function:

* scalar triple ``(a, b, q)``: the Gaussian rational ``(a + b*i)/q`` with
  ``q > 0`` and ``gcd(a, b, q) == 1``; zero is ``(0, 0, 1)``.
* field dict ``{d: triple}``: an element of the multi-quadratic extension,
  ``sum_d triple_d * sqrt(d)`` with every key ``d`` a positive squarefree
  integer. Key ``1`` holds the rational part. Zero triples are never stored;
  zero is the empty dict.
* poly dict ``{exponents: field dict}``: a sparse multivariate polynomial,
  keys are tuples of nonnegative ints (one slot per coordinate). Zero
  coefficients are never stored; zero is the empty dict.

All functions are pure: inputs are never mutated, outputs are fresh objects
(aliasing of immutable triples/tuples is fine).
"""

from math import gcd

G_ZERO = (0, 0, 1)
G_ONE = (1, 0, 1)


def g_make(a, b, q):
    """Normalize a raw (numerator, i-numerator, denominator) into a triple."""
    if q < 0:
        a, b, q = -a, -b, -q
    g = gcd(gcd(a, b), q)
    if g > 1:
        a //= g
        b //= g
        q //= g
    return (a, b, q)


def g_add(x, y):
    a1, b1, q1 = x
    a2, b2, q2 = y
    return g_make(a1 * q2 + a2 * q1, b1 * q2 + b2 * q1, q1 * q2)


def g_mul(x, y):
    a1, b1, q1 = x
    a2, b2, q2 = y
    return g_make(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, q1 * q2)


def g_neg(x):
    a, b, q = x
    return (-a, -b, q)


def g_conj(x):
    a, b, q = x
    return (a, -b, q)


def g_inv(x):
    """Reciprocal of a nonzero Gaussian rational triple."""
    a, b, q = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return g_make(q * a, -q * b, n)


def fe_add(u, v):
    out = dict(u)
    for d, c in v.items():
        prev = out.get(d)
        if prev is None:
            out[d] = c
        else:
            a, b, q = g_add(prev, c)
            if a == 0 and b == 0:
                del out[d]
            else:
                out[d] = (a, b, q)
    return out


def fe_neg(u):
    return {d: (-a, -b, q) for d, (a, b, q) in u.items()}


def fe_sub(u, v):
    return fe_add(u, fe_neg(v))


def fe_conj(u):
    return {d: (a, -b, q) for d, (a, b, q) in u.items()}


def fe_scale(u, c):
    """Multiply a field dict by one scalar triple."""
    if c[0] == 0 and c[1] == 0:
        return {}
    return {d: g_mul(x, c) for d, x in u.items()}


def _split_square(m):
    """m = s*s*d with d squarefree; returns (s, d). m must be positive."""
    s = 1
    d = 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            if e & 1:
                d *= f
            s *= f ** (e >> 1)
        f += 1 if f == 2 else 2
    return s, d * m


def fe_mul(u, v):
    out = {}
    for d1, c1 in u.items():
        for d2, c2 in v.items():
            if d1 == d2:
                d = 1
                m = d1
            elif d1 == 1:
                d = d2
                m = 1
            elif d2 == 1:
                d = d1
                m = 1
            else:
                g = gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                m = g
            a, b, q = g_mul(c1, c2)
            if m != 1:
                a, b, q = g_make(a * m, b * m, q)
            prev = out.get(d)
            if prev is None:
                if a or b:
                    out[d] = (a, b, q)
            else:
                a, b, q = g_add(prev, (a, b, q))
                if a == 0 and b == 0:
                    del out[d]
                else:
                    out[d] = (a, b, q)
    return out


def p_add(p, q):
    out = dict(p)
    for m, c in q.items():
        prev = out.get(m)
        if prev is None:
            out[m] = c
        else:
            s = fe_add(prev, c)
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def p_neg(p):
    return {m: fe_neg(c) for m, c in p.items()}


def p_sub(p, q):
    return p_add(p, p_neg(q))


def p_scale(p, u):
    """Multiply a poly dict by one field dict."""
    if not u:
        return {}
    out = {}
    for m, c in p.items():
        prod = fe_mul(c, u)
        if prod:
            out[m] = prod
    return out


def p_mul(p, q):
    if not p or not q:
        return {}
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            c = fe_mul(c1, c2)
            prev = out.get(m)
            if prev is None:
                if c:
                    out[m] = c
            else:
                s = fe_add(prev, c)
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def p_diff(p, i):
    """Partial derivative in coordinate i. Monomial images are distinct, so
    no accumulation is needed."""
    out = {}
    for m, c in p.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = fe_scale(c, (e, 0, 1))
    return out


def p_compose(p, perm, signs):
    """(w p)(x) = p(w x) where (w x)_r = signs[r] * x_{perm[r]}.

    The monomial map is a bijection, so no accumulation is needed.
    """
    n = len(perm)
    out = {}
    for m, c in p.items():
        new = [0] * n
        neg = False
        for r in range(n):
            e = m[r]
            if e:
                new[perm[r]] = e
                if signs[r] < 0 and (e & 1):
                    neg = not neg
        out[tuple(new)] = fe_neg(c) if neg else c
    return out


def _p_shift(p, j):
    """Multiply a poly dict by the coordinate x_j."""
    out = {}
    for m, c in p.items():
        out[m[:j] + (m[j] + 1,) + m[j + 1:]] = c
    return out


def p_div_linear(p, i, j):
    """Exact division by the form (x_i - x_j), or by x_i when j < 0.

    Returns the quotient dict, or None when the division is inexact.
    """
    if not p:
        return {}
    if j < 0:
        out = {}
        for m, c in p.items():
            e = m[i]
            if e == 0:
                return None
            out[m[:i] + (e - 1,) + m[i + 1:]] = c
        return out
    # Synthetic division in the variable x_i with root x_j: write
    # p = sum_d c_d x_i^d, then b_{D-1} = c_D, b_{d} = c_{d+1} + x_j b_{d+1},
    # remainder c_0 + x_j b_0.
    levels = {}
    for m, c in p.items():
        e = m[i]
        base = m[:i] + (0,) + m[i + 1:]
        levels.setdefault(e, {})[base] = c
    top = max(levels)
    if top == 0:
        return None
    b = levels[top]
    quot_levels = {top - 1: b}
    for d in range(top - 2, -1, -1):
        b = p_add(levels.get(d + 1, {}), _p_shift(b, j))
        quot_levels[d] = b
    if p_add(levels.get(0, {}), _p_shift(b, j)):
        return None
    out = {}
    for d, lvl in quot_levels.items():
        for base, c in lvl.items():
            out[base[:i] + (d,) + base[i + 1:]] = c
    return out


def p_eval(p, coords):
    """Evaluate a poly dict at a point given as a sequence of field dicts."""
    powers = [{0: {1: G_ONE}} for _ in coords]
    total = {}
    for m, c in p.items():
        term = c
        for idx, e in enumerate(m):
            if e == 0:
                continue
            cache = powers[idx]
            if e not in cache:
                known = max(cache)
                acc = cache[known]
                while known < e:
                    acc = fe_mul(acc, coords[idx])
                    known += 1
                    cache[known] = acc
            term = fe_mul(term, cache[e])
        total = fe_add(total, term)
    return total
