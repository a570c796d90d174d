"""Exact root-system data for the simple types and their products.

Every root system here is realized from explicit simple roots in Euclidean
coordinates, rescaled so that long roots have squared length 2. The Cartan
matrix follows the convention ``cartan[i][j] = <alpha_i, alpha_j^vee>``.

Weights carry their coordinates together with a basis tag:

``"weight"``
    fundamental-weight coordinates (Dynkin labels); the canonical form.
``"root"``
    simple-root coordinates.
``"coroot"``
    simple-coroot coordinates; this is how rational one-parameter subgroups
    (elements of ``Y(T) (x) Q``) are written. Converting such a vector to the
    weight basis is the identification ``lambda -> chi_lambda`` given by the
    invariant inner product.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import _linalg as la
from .validation import ValidationError, check_vector

BASES = ("weight", "root", "coroot")
_H = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class Weight:
    """A rational vector in one of the three coordinate systems of a root system."""

    coords: tuple[Fraction, ...]
    basis: str = "weight"

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValidationError(f"unknown basis {self.basis!r}", "basis")
        object.__setattr__(self, "coords", check_vector(self.coords, name="weight"))

    def __add__(self, other: "Weight") -> "Weight":
        self._same_basis(other)
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Weight") -> "Weight":
        self._same_basis(other)
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.coords), self.basis)

    def __mul__(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * x for x in self.coords), self.basis)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(x / c for x in self.coords), self.basis)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def _same_basis(self, other: "Weight") -> None:
        if self.basis != other.basis or len(self.coords) != len(other.coords):
            raise ValidationError("weights live in different coordinate systems", "basis_match")


# Simple roots in Euclidean coordinates (Bourbaki numbering).


def _e(n: int, *entries) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for idx, c in entries:
        v[idx] = Fraction(c)
    return tuple(v)


def _classical(series: str, n: int) -> list[tuple[Fraction, ...]]:
    if series == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    roots = [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
    if series == "B":
        roots.append(_e(n, (n - 1, 1)))
    elif series == "C":
        roots.append(_e(n, (n - 1, 2)))
    else:
        roots.append(_e(n, (n - 2, 1), (n - 1, 1)))
    return roots


def _exceptional(series: str, n: int) -> list[tuple[Fraction, ...]]:
    if series == "E":
        e8 = [
            tuple([_H] + [-_H] * 6 + [_H]),
            _e(8, (0, 1), (1, 1)),
            _e(8, (0, -1), (1, 1)),
        ] + [_e(8, (i, -1), (i + 1, 1)) for i in range(1, 6)]
        return e8[:n]
    if series == "F":
        return [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            (_H, -_H, -_H, -_H),
        ]
    return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _check_type(series: str, rank: int) -> None:
    if series in _MIN_RANK:
        if rank < _MIN_RANK[series]:
            raise ValidationError(f"invalid type {series}{rank}", "root_system_type")
    elif series in _EXCEPTIONAL_RANKS:
        if rank not in _EXCEPTIONAL_RANKS[series]:
            raise ValidationError(f"invalid type {series}{rank}", "root_system_type")
    else:
        raise ValidationError(f"unknown series {series!r}", "root_system_type")


def euclidean_simple_roots(series: str, rank: int) -> list[tuple[Fraction, ...]]:
    _check_type(series, rank)
    if series in _MIN_RANK:
        return _classical(series, rank)
    return _exceptional(series, rank)


class RootSystem:
    """Cartan data for a simple type or a product of simple types.

    Instances are immutable by convention; derived tables are cached on
    first use.
    """

    def __init__(self, components, cartan, gram):
        self.components = tuple(components)
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.gram = la.to_matrix(gram)
        self.rank = len(self.cartan)
        self.root_lengths = tuple(self.gram[i][i] for i in range(self.rank))
        # fund_weights[i] is omega_i in simple-root coordinates.
        self.fund_weights = la.inverse(la.to_matrix(self.cartan))
        self.weight_gram = la.matmul(la.matmul(self.fund_weights, self.gram),
                                     la.transpose(self.fund_weights))

    @property
    def name(self) -> str:
        return "x".join(f"{s}{r}" for s, r in self.components)

    @property
    def series(self) -> str:
        return self.components[0][0] if len(self.components) == 1 else "product"

    def __repr__(self) -> str:
        return f"RootSystem({self.name!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    # -- coordinates ---------------------------------------------------

    def weight(self, coords, basis: str = "weight") -> Weight:
        return Weight(check_vector(coords, self.rank, "weight"), basis)

    def zero(self) -> Weight:
        return Weight((Fraction(0),) * self.rank)

    def check(self, w: Weight) -> Weight:
        if not isinstance(w, Weight):
            raise ValidationError(f"expected a Weight, got {type(w).__name__}", "weight")
        if len(w.coords) != self.rank:
            raise ValidationError(
                f"weight has {len(w.coords)} coordinates, ambient {self.name} has rank {self.rank}",
                "rank_match",
            )
        return w

    def to_weight_basis(self, w: Weight) -> Weight:
        self.check(w)
        if w.basis == "weight":
            return w
        r = self._root_coords(w)
        return Weight(tuple(sum((r[j] * self.cartan[j][i] for j in range(self.rank)), Fraction(0))
                            for i in range(self.rank)))

    def to_root_basis(self, w: Weight) -> Weight:
        return Weight(self._root_coords(self.check(w)), "root")

    def to_coroot_basis(self, w: Weight) -> Weight:
        r = self._root_coords(self.check(w))
        return Weight(tuple(x * ln / 2 for x, ln in zip(r, self.root_lengths)), "coroot")

    def convert(self, w: Weight, basis: str) -> Weight:
        return {"weight": self.to_weight_basis, "root": self.to_root_basis,
                "coroot": self.to_coroot_basis}[basis](w)

    def _root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        if w.basis == "root":
            return w.coords
        if w.basis == "coroot":
            return tuple(2 * c / ln for c, ln in zip(w.coords, self.root_lengths))
        fw = self.fund_weights
        return tuple(sum((w.coords[i] * fw[i][j] for i in range(self.rank)), Fraction(0))
                     for j in range(self.rank))

    # -- distinguished vectors -------------------------------------------

    def simple_root(self, i: int) -> Weight:
        """The ``i``-th simple root (1-based), in the weight basis."""
        return Weight(tuple(Fraction(x) for x in self.cartan[i - 1]))

    def simple_coroot(self, i: int) -> Weight:
        return Weight(tuple(Fraction(int(k == i - 1)) for k in range(self.rank)), "coroot")

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(Fraction(int(k == i - 1)) for k in range(self.rank)))

    def fundamental_coweight(self, i: int) -> Weight:
        """``omega_i^vee`` in the coroot basis: pairs to ``delta_ij`` with ``alpha_j``."""
        return Weight(tuple(row[i - 1] for row in self.fund_weights), "coroot")

    @cached_property
    def rho(self) -> Weight:
        return Weight((Fraction(1),) * self.rank)

    # -- forms -------------------------------------------------------------

    def inner(self, w1: Weight, w2: Weight) -> Fraction:
        """The Weyl-invariant inner product (long roots have squared length 2)."""
        a = self.to_weight_basis(w1).coords
        b = self.to_weight_basis(w2).coords
        return la.bilinear(a, self.weight_gram, b)

    def q(self, w: Weight) -> Fraction:
        return self.inner(w, w)

    def pair(self, chi: Weight, lam: Weight) -> Fraction:
        """Pairing of a character with a rational one-parameter subgroup.

        When ``lam`` is in coroot coordinates this is the integral pairing
        ``sum_k c_k <chi, alpha_k^vee>``; any other basis means ``lam`` is
        already on the character side and the inner product is used.
        """
        if lam.basis == "coroot":
            self.check(lam)
            m = self.to_weight_basis(chi).coords
            return sum((c * x for c, x in zip(lam.coords, m)), Fraction(0))
        return self.inner(chi, lam)

    def one_ps_to_character(self, lam: Weight) -> Weight:
        """``chi_lambda``: the character with ``pair(chi_lambda, mu) = inner(lambda, mu)``."""
        return self.to_weight_basis(lam)

    def height(self, w: Weight) -> Fraction:
        """Sum of the simple-root coordinates."""
        return sum(self._root_coords(self.check(w)), Fraction(0))

    # -- roots ---------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        """Positive roots in the simple-root basis, sorted by height then coordinates."""
        found = set()
        queue = deque()
        for i in range(self.rank):
            r = tuple(int(k == i) for k in range(self.rank))
            found.add(r)
            queue.append(r)
        while queue:
            r = queue.popleft()
            for i in range(self.rank):
                c = sum(r[j] * self.cartan[j][i] for j in range(self.rank))
                s = tuple(x - c * (k == i) for k, x in enumerate(r))
                if all(x >= 0 for x in s) and s not in found:
                    found.add(s)
                    queue.append(s)
        ordered = sorted(found, key=lambda r: (sum(r), r))
        return tuple(Weight(tuple(Fraction(x) for x in r), "root") for r in ordered)

    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.to_weight_basis(r) for r in self.roots)

    def is_root(self, w: Weight) -> bool:
        return self.to_weight_basis(w) in self._root_set

    @cached_property
    def highest_root(self) -> Weight:
        if len(self.components) != 1:
            raise ValidationError("highest root is defined for simple types only", "simple_type")
        return self.positive_roots[-1]

    def coroot(self, alpha: Weight) -> Weight:
        """``2 alpha / (alpha, alpha)``, returned in the simple-root basis."""
        if not self.is_root(alpha):
            raise ValidationError(f"{alpha} is not a root of {self.name}", "is_root")
        a = self.to_root_basis(alpha)
        return a * (Fraction(2) / self.inner(a, a))

    # -- Weyl group ----------------------------------------------------------

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection ``s_i`` (1-based), returned in the weight basis."""
        m = self.to_weight_basis(w).coords
        c = m[i - 1]
        if not c:
            return Weight(m)
        row = self.cartan[i - 1]
        return Weight(tuple(x - c * a for x, a in zip(m, row)))

    def apply_word(self, w: Weight, word) -> Weight:
        """Apply simple reflections in sequence, first letter first."""
        w = self.to_weight_basis(w)
        for i in word:
            w = self.reflect(w, i)
        return w

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in self.to_weight_basis(w).coords)

    def dominant_representative(self, w: Weight) -> tuple[Weight, list[int]]:
        """The unique dominant weight in the orbit of ``w`` and a word reaching it."""
        w = self.to_weight_basis(w)
        word: list[int] = []
        while True:
            i = next((k for k, x in enumerate(w.coords) if x < 0), None)
            if i is None:
                return w, word
            w = self.reflect(w, i + 1)
            word.append(i + 1)

    def weyl_orbit(self, w: Weight, cap: int = 10**6) -> list[Weight]:
        start = self.to_weight_basis(w)
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for i in range(1, self.rank + 1):
                u = self.reflect(v, i)
                if u not in seen:
                    seen.add(u)
                    if len(seen) > cap:
                        raise ValidationError(f"Weyl orbit exceeds cap {cap}", "weyl_cap")
                    queue.append(u)
        return sorted(seen)

    def weyl_group_order(self, cap: int = 10**6) -> int:
        """Order of the Weyl group, by enumerating the (free) orbit of ``rho``."""
        return len(self.weyl_orbit(self.rho, cap))


def build_root_system(series: str, rank: int) -> RootSystem:
    """Root system of the simple type ``series``/``rank`` (e.g. ``("G", 2)``)."""
    series = series.upper()
    rank = int(rank)
    vecs = euclidean_simple_roots(series, rank)
    gram = [[la.dot(u, v) for v in vecs] for u in vecs]
    long = max(gram[i][i] for i in range(rank))
    gram = [[2 * x / long for x in row] for row in gram]
    cartan = [[2 * gram[i][j] / gram[j][j] for j in range(rank)] for i in range(rank)]
    return RootSystem([(series, rank)], cartan, gram)


def product_root_system(*systems: RootSystem) -> RootSystem:
    """Block-diagonal root system of a product of groups; coordinates concatenate."""
    n = sum(s.rank for s in systems)
    cartan = [[0] * n for _ in range(n)]
    gram = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for s in systems:
        for i in range(s.rank):
            for j in range(s.rank):
                cartan[off + i][off + j] = s.cartan[i][j]
                gram[off + i][off + j] = s.gram[i][j]
        off += s.rank
    comps = [c for s in systems for c in s.components]
    return RootSystem(comps, cartan, gram)


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_type(text: str) -> RootSystem:
    """Parse ``"A2"``, ``"G2"`` or a product such as ``"A1xA2"``."""
    parts = [p for p in re.split(r"[x×*]", text.strip()) if p]
    if not parts:
        raise ValidationError(f"invalid type string {text!r}", "root_system_type")
    systems = []
    for p in parts:
        m = _TYPE_RE.match(p.strip())
        if not m:
            raise ValidationError(f"invalid type string {p!r}", "root_system_type")
        systems.append(build_root_system(m.group(1), int(m.group(2))))
    return systems[0] if len(systems) == 1 else product_root_system(*systems)
