"""Separability invariants of a representation from its torus character.

For a subset ``S`` of the distinct weights, the character matrix has the
weights of ``S`` as integer columns (fundamental-weight coordinates). Its
gcd of maximal minors ``g_S`` detects inseparable torus actions in the
characteristics dividing it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from sympy import primefactors

from .characters import Character, exterior_char, height_of_char
from .validation import ValidationError, check_guard, check_integral, check_prime

CONVENTIONS = ("rank", "literal")
UNBOUNDED = "unbounded"


def character_matrix(c: Character, subset=None) -> tuple[tuple[int, ...], ...]:
    """Integer matrix whose columns are the chosen weights (all of the support by default)."""
    weights = c.support if subset is None else subset
    cols = [check_integral(c.ambient.to_weight_basis(w).coords) for w in weights]
    return tuple(tuple(col[i] for col in cols) for i in range(c.ambient.rank))


def invariant_factors(a) -> list[int]:
    """Non-zero diagonal entries of the Smith normal form of an integer matrix."""
    m = [list(map(int, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        entries = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            p = m[t][t]
            for i in range(t + 1, rows):
                f = m[i][t] // p
                if f:
                    m[i] = [x - f * y for x, y in zip(m[i], m[t])]
            for j in range(t + 1, cols):
                f = m[t][j] // p
                if f:
                    for row in m:
                        row[j] -= f * row[t]
            rest = [(abs(m[i][t]), i, t) for i in range(t + 1, rows) if m[i][t]]
            rest += [(abs(m[t][j]), t, j) for j in range(t + 1, cols) if m[t][j]]
            if rest:
                _, i, j = min(rest)
                m[t], m[i] = m[i], m[t]
                for row in m:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if m[i][j] % p), None)
            if bad is not None:
                m[t] = [x + y for x, y in zip(m[t], m[bad])]
                continue
            break
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def g_of(m, convention: str = "rank") -> int:
    """Gcd of the maximal minors of an integer matrix.

    ``convention="rank"`` uses minors of size ``rank(m)`` and returns 1 for
    the zero matrix. ``convention="literal"`` uses minors of size
    ``min(rows, cols)`` and so returns 0 when the matrix is rank deficient.
    """
    if convention not in CONVENTIONS:
        raise ValidationError(f"unknown convention {convention!r}", "convention")
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = invariant_factors(m)
    size = len(d) if convention == "rank" else min(rows, cols)
    if len(d) < size:
        return 0
    g = 1
    for x in d[:size]:
        g *= x
    return g


def _largest_prime(g: int):
    if g == 0:
        return UNBOUNDED
    ps = primefactors(g)
    return max(ps) if ps else 1


def subset_gcds(c: Character, guard: int | None = None, convention: str = "rank") -> dict[tuple[int, ...], int]:
    """``g_S`` for every non-empty subset ``S`` of the support, keyed by sorted indices."""
    support = c.support
    check_guard((1 << len(support)) - 1, guard)
    cols = character_matrix(c)
    cols = [tuple(row[j] for row in cols) for j in range(len(support))]
    out = {}
    for k in range(1, len(support) + 1):
        for sub in combinations(range(len(support)), k):
            mat = [tuple(cols[j][i] for j in sub) for i in range(c.ambient.rank)]
            out[sub] = g_of(mat, convention)
    return out


def _max_bound(values):
    values = list(values)
    if UNBOUNDED in values:
        return UNBOUNDED
    return max(values, default=1)


def p_t_from_gcds(gcds) -> int | str:
    return _max_bound(_largest_prime(g) for g in gcds.values())


def p_t_of(c: Character, guard: int | None = None, convention: str = "rank") -> int | str:
    """Largest prime dividing some ``g_S``; 1 when no prime divides any of them."""
    return p_t_from_gcds(subset_gcds(c, guard, convention))


def _as_number(x: Fraction):
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class SeparabilityReport:
    height: Fraction
    p_t: int | str
    psi: int | Fraction | str
    g_values: dict = field(compare=True)
    convention: str = "rank"

    @property
    def unbounded(self) -> bool:
        return self.psi == UNBOUNDED


def separability_index(c: Character, guard: int | None = None, convention: str = "rank") -> SeparabilityReport:
    gcds = subset_gcds(c, guard, convention)
    p_t = p_t_from_gcds(gcds)
    ht = height_of_char(c)
    psi = UNBOUNDED if p_t == UNBOUNDED else _as_number(max(ht, Fraction(p_t)))
    return SeparabilityReport(height=ht, p_t=p_t, psi=psi, g_values=gcds, convention=convention)


def psi_bar(c: Character, guard: int | None = None, convention: str = "rank") -> int | Fraction | str:
    """Maximum separability index over the exterior powers ``1 <= i <= dim``."""
    values = [separability_index(exterior_char(c, i), guard, convention).psi
              for i in range(1, c.dim + 1)]
    return _max_bound(values)


def has_low_separability(c: Character, p, guard: int | None = None, convention: str = "rank") -> bool:
    """``p`` exceeds the separability bound of every exterior power (``p = "zero"`` always passes)."""
    p = check_prime(p)
    if p == "zero":
        return True
    bound = psi_bar(c, guard, convention)
    return bound != UNBOUNDED and p > bound
