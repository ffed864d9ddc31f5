# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of `_kernels`. Same function surface, same data layouts,
same semantics; keep the two files in sync (the parity test compares them on
random inputs)."""

from math import gcd

G_ZERO = (0, 0, 1)
G_ONE = (1, 0, 1)


def g_make(a, b, q):
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
    a, b, q = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return g_make(q * a, -q * b, n)


def fe_add(u, v):
    cdef dict out = dict(u)
    for d, c in v.items():
        prev = out.get(d)
        if prev is None:
            out[d] = c
        else:
            s = g_add(prev, c)
            if s[0] == 0 and s[1] == 0:
                del out[d]
            else:
                out[d] = s
    return out


def fe_neg(u):
    return {d: (-a, -b, q) for d, (a, b, q) in u.items()}


def fe_sub(u, v):
    return fe_add(u, fe_neg(v))


def fe_conj(u):
    return {d: (a, -b, q) for d, (a, b, q) in u.items()}


def fe_scale(u, c):
    if c[0] == 0 and c[1] == 0:
        return {}
    return {d: g_mul(x, c) for d, x in u.items()}


def _split_square(m):
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
    cdef dict out = {}
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
            c = g_mul(c1, c2)
            if m != 1:
                c = g_make(c[0] * m, c[1] * m, c[2])
            prev = out.get(d)
            if prev is None:
                if c[0] or c[1]:
                    out[d] = c
            else:
                s = g_add(prev, c)
                if s[0] == 0 and s[1] == 0:
                    del out[d]
                else:
                    out[d] = s
    return out


def p_add(p, q):
    cdef dict out = dict(p)
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
    if not u:
        return {}
    cdef dict out = {}
    for m, c in p.items():
        prod = fe_mul(c, u)
        if prod:
            out[m] = prod
    return out


def p_mul(p, q):
    if not p or not q:
        return {}
    cdef dict out = {}
    cdef Py_ssize_t n, t
    cdef list buf
    for m1, c1 in p.items():
        n = len(<tuple>m1)
        for m2, c2 in q.items():
            buf = [0] * n
            for t in range(n):
                buf[t] = (<tuple>m1)[t] + (<tuple>m2)[t]
            m = tuple(buf)
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
    cdef dict out = {}
    for m, c in p.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = fe_scale(c, (e, 0, 1))
    return out


def p_compose(p, perm, signs):
    cdef Py_ssize_t n = len(perm)
    cdef Py_ssize_t r
    cdef dict out = {}
    cdef list new
    cdef bint neg
    for m, c in p.items():
        new = [0] * n
        neg = False
        for r in range(n):
            e = (<tuple>m)[r]
            if e:
                new[perm[r]] = e
                if signs[r] < 0 and (e & 1):
                    neg = not neg
        out[tuple(new)] = fe_neg(c) if neg else c
    return out


def _p_shift(p, j):
    cdef dict out = {}
    for m, c in p.items():
        out[m[:j] + (m[j] + 1,) + m[j + 1:]] = c
    return out


def p_div_linear(p, i, j):
    if not p:
        return {}
    cdef dict out, levels, lvl, b
    if j < 0:
        out = {}
        for m, c in p.items():
            e = m[i]
            if e == 0:
                return None
            out[m[:i] + (e - 1,) + m[i + 1:]] = c
        return out
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
    cdef list powers = [{0: {1: G_ONE}} for _ in coords]
    cdef dict total = {}
    cdef Py_ssize_t idx
    for m, c in p.items():
        term = c
        for idx in range(len(<tuple>m)):
            e = (<tuple>m)[idx]
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
