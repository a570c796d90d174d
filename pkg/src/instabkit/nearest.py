"""Exact minimum-norm point of a convex hull under a positive definite form.

Two independent routes are provided:

* :func:`nearest_point_caratheodory` enumerates every affinely independent
  subset of at most ``dim + 1`` points, projects the origin onto its affine
  hull and keeps the projections with non-negative barycentric coordinates.
  The linear systems are solved fraction-free (Bareiss) on an integer
  rescaling of the data.
* :func:`nearest_point_wolfe` is Wolfe's active-set minimum-norm-point
  iteration carried out in rational arithmetic.

Points are tuples of Fractions, ``gram`` is the matrix of the form in those
coordinates. Both functions return the unique minimizer as a tuple of
Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from . import _linalg as la


def _unique(points) -> list[tuple[Fraction, ...]]:
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    if not pts:
        raise ValueError("nearest point of an empty set is undefined")
    return pts


def _combine(coeffs, pts) -> tuple[Fraction, ...]:
    dim = len(pts[0])
    out = [Fraction(0)] * dim
    for c, p in zip(coeffs, pts):
        if c:
            for k in range(dim):
                out[k] += c * p[k]
    return tuple(out)


def _bareiss_solve(a: list[list[int]], b: list[int]):
    """Solve ``a x = b`` over the integers without fractions.

    Returns ``(numerators, d)`` with ``x = numerators / d``, or ``None`` when
    ``a`` is singular.
    """
    n = len(a)
    m = [row[:] + [bi] for row, bi in zip(a, b)]
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return None
            m[k], m[p] = m[p], m[k]
        pk = m[k]
        akk = pk[k]
        for i in range(k + 1, n):
            mi = m[i]
            aik = mi[k]
            for j in range(k + 1, n + 1):
                mi[j] = (mi[j] * akk - aik * pk[j]) // prev
            mi[k] = 0
        prev = akk
    d = m[n - 1][n - 1]
    if d == 0:
        return None
    x = [0] * n
    for i in range(n - 1, -1, -1):
        s = d * m[i][n]
        row = m[i]
        for j in range(i + 1, n):
            s -= row[j] * x[j]
        x[i] = s // row[i]
    return x, d


def _integer_data(pts, gram):
    den = 1
    for p in pts:
        for x in p:
            den = lcm(den, x.denominator)
    gden = 1
    for row in gram:
        for x in row:
            gden = lcm(gden, x.denominator)
    ipts = [[int(x * den) for x in p] for p in pts]
    igram = [[int(x * gden) for x in row] for row in gram]
    dim = len(gram)
    gp = [[sum(igram[r][c] * p[c] for c in range(dim)) for r in range(dim)] for p in ipts]
    return [[sum(x * y for x, y in zip(p, g)) for g in gp] for p in ipts]


def nearest_point_caratheodory(points: Sequence[Sequence[Fraction]], gram) -> tuple[Fraction, ...]:
    pts = _unique(points)
    dim = len(gram)
    ip = _integer_data(pts, gram)
    n = len(pts)
    best_q = None
    best = None
    for k in range(1, min(n, dim + 1) + 1):
        rhs = [0] * k + [1]
        for sub in combinations(range(n), k):
            kkt = [[ip[i][j] for j in sub] + [1] for i in sub]
            kkt.append([1] * k + [0])
            sol = _bareiss_solve(kkt, rhs)
            if sol is None:
                continue
            x, d = sol
            if any(c * d < 0 for c in x[:k]):
                continue
            # For the KKT solution the (rescaled) squared norm equals minus the multiplier.
            q = Fraction(-x[k], d)
            if best_q is None or q < best_q:
                best_q = q
                best = (sub, [Fraction(c, d) for c in x[:k]])
    sub, coeffs = best
    return _combine(coeffs, [pts[i] for i in sub])


def _affine_minimizer(ip, active):
    k = len(active)
    kkt = [[ip[i][j] for j in active] + [Fraction(1)] for i in active]
    kkt.append([Fraction(1)] * k + [Fraction(0)])
    sol = la.solve(kkt, [Fraction(0)] * k + [Fraction(1)])
    if sol is None:
        raise ArithmeticError("active set became affinely dependent")
    return list(sol[:k])


def nearest_point_wolfe(points: Sequence[Sequence[Fraction]], gram) -> tuple[Fraction, ...]:
    pts = _unique(points)
    n = len(pts)
    gram = la.to_matrix(gram)
    gp = [la.matvec(gram, p) for p in pts]
    ip = [[la.dot(p, g) for g in gp] for p in pts]

    start = min(range(n), key=lambda i: ip[i][i])
    active = [start]
    weights = [Fraction(1)]
    for _ in range(max(64, 1 << min(n, 24))):
        xp = [sum((w * ip[i][j] for i, w in zip(active, weights)), Fraction(0)) for j in range(n)]
        xx = sum((w * xp[i] for i, w in zip(active, weights)), Fraction(0))
        j = min(range(n), key=lambda t: xp[t])
        if xp[j] >= xx:
            return _combine(weights, [pts[i] for i in active])
        if j in active:
            raise ArithmeticError("descent direction already in the active set")
        active.append(j)
        weights.append(Fraction(0))
        while True:
            alpha = _affine_minimizer(ip, active)
            if all(a >= 0 for a in alpha):
                weights = alpha
            else:
                theta = min(w / (w - a) for w, a in zip(weights, alpha) if a < 0)
                weights = [(1 - theta) * w + theta * a for w, a in zip(weights, alpha)]
            keep = [t for t, w in enumerate(weights) if w != 0]
            active = [active[t] for t in keep]
            weights = [weights[t] for t in keep]
            if all(a >= 0 for a in alpha):
                break
    raise ArithmeticError("minimum-norm-point iteration did not terminate")
