"""Tiny dense matrices over the exact scalar field (tuples of tuples of
FieldElem). Internal plumbing for representation and Clifford matrices;
nothing here is size-generic beyond what those need."""

from .algebra import felem

__all__ = [
    "mat_from_rows",
    "mat_identity",
    "mat_zero",
    "mat_add",
    "mat_sub",
    "mat_neg",
    "mat_mul",
    "mat_scale",
    "mat_dagger",
    "mat_is_identity",
    "kron",
]


def mat_from_rows(rows):
    out = tuple(tuple(felem(x) for x in row) for row in rows)
    width = len(out[0])
    if any(len(r) != width for r in out):
        raise ValueError("ragged matrix")
    return out


def mat_identity(n):
    return tuple(
        tuple(felem(1 if r == c else 0) for c in range(n)) for r in range(n)
    )


def mat_zero(n):
    z = felem(0)
    return tuple((z,) * n for _ in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    inner = len(b)
    out = []
    for r in range(n):
        row = []
        for c in range(m):
            acc = felem(0)
            for t in range(inner):
                acc = acc + a[r][t] * b[t][c]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(a, c):
    c = felem(c)
    return tuple(tuple(x * c for x in row) for row in a)


def mat_dagger(a):
    n = len(a)
    m = len(a[0])
    return tuple(tuple(a[r][c].conj() for r in range(n)) for c in range(m))


def mat_is_identity(a):
    n = len(a)
    for r in range(n):
        for c in range(n):
            if a[r][c] != (1 if r == c else 0):
                return False
    return True


def kron(a, b):
    """Kronecker product, left factor outermost."""
    nb = len(b)
    out = []
    for ra in a:
        for rb in range(nb):
            row = []
            for xa in ra:
                for xb in b[rb]:
                    row.append(xa * xb)
            out.append(tuple(row))
    return tuple(out)
