"""Small exact linear algebra over ``fractions.Fraction``.

Matrices are tuples (or lists) of row tuples. These helpers are tuned for the
tiny systems that appear in nearest-point and kernel computations, where the
per-call overhead of a general CAS matrix type dominates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]
Vector = Sequence[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def to_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(as_fraction(x) for x in row) for row in rows)


def to_vector(xs) -> tuple[Fraction, ...]:
    return tuple(as_fraction(x) for x in xs)


def identity(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(n: int, m: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(ZERO for _ in range(m)) for _ in range(n))


def transpose(a: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a)


def matvec(a: Matrix, v: Vector) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), ZERO)


def bilinear(u: Vector, g: Matrix, v: Vector) -> Fraction:
    return dot(u, matvec(g, v))


def add(a: Matrix, b: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(c * x for x in row) for row in a)


def kron(a: Matrix, b: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    rows = []
    for ra in a:
        for rb in b:
            rows.append(tuple(x * y for x in ra for y in rb))
    return tuple(rows)


def kron_vec(u: Vector, v: Vector) -> tuple[Fraction, ...]:
    return tuple(x * y for x in u for y in v)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, pc in zip(m, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Matrix, b: Vector) -> tuple[Fraction, ...] | None:
    """Unique solution of a square system, or None when ``a`` is singular."""
    n = len(a)
    m = [list(row) + [bi] for row, bi in zip(a, b)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return None
        if p != c:
            m[c], m[p] = m[p], m[c]
        pivot_row = m[c]
        pv = pivot_row[c]
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f = f / pv
                row = m[i]
                for k in range(c, n + 1):
                    row[k] -= f * pivot_row[k]
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n]
        row = m[i]
        for k in range(i + 1, n):
            s -= row[k] * x[k]
        x[i] = s / row[i]
    return tuple(x)


def inverse(a: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in m)


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        pv = m[c][c]
        d *= pv
        for i in range(c + 1, n):
            f = m[i][c] / pv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d
