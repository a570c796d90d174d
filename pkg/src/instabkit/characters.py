"""Torus characters of representations as exact weight multisets."""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .roots import RootSystem, Weight, product_root_system
from .validation import ValidationError, check_integral, check_prime


@dataclass(frozen=True)
class Character:
    """A finite multiset of weights (fundamental-weight basis) with multiplicities."""

    ambient: RootSystem
    weights: tuple[tuple[Weight, int], ...]

    def __init__(self, ambient: RootSystem, weights: Mapping[Weight, int] | tuple):
        items = weights.items() if isinstance(weights, Mapping) else weights
        merged: Counter = Counter()
        for w, m in items:
            if not isinstance(m, int) or m < 0:
                raise ValidationError(f"multiplicity must be a non-negative integer: {m!r}",
                                      "multiplicity")
            merged[ambient.to_weight_basis(w)] += m
        merged = +merged
        if not merged:
            raise ValidationError("a character must have total dimension >= 1", "dimension")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "weights", tuple(sorted(merged.items(), reverse=True)))

    @property
    def multiplicities(self) -> dict[Weight, int]:
        return dict(self.weights)

    @property
    def support(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.weights)

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.weights)

    def expanded(self) -> list[Weight]:
        return [w for w, m in self.weights for _ in range(m)]

    def is_w_stable(self) -> bool:
        mult = self.multiplicities
        for i in range(1, self.ambient.rank + 1):
            reflected = Counter()
            for w, m in self.weights:
                reflected[self.ambient.reflect(w, i)] += m
            if reflected != mult:
                return False
        return True


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {rs.zero(): 1})


def _dominant_weights_below(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Dominant weights ``mu <= lam`` keyed by Dynkin labels, mapped to ``lam - mu`` in root coordinates."""
    pos = [tuple(int(x) for x in r.coords) for r in rs.positive_roots]
    pos_dyn = [tuple(int(x) for x in rs.to_weight_basis(r).coords) for r in rs.positive_roots]
    zero = (0,) * rs.rank
    found = {lam: zero}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        off = found[mu]
        for r, rd in zip(pos, pos_dyn):
            nu = tuple(a - b for a, b in zip(mu, rd))
            if min(nu) >= 0 and nu not in found:
                found[nu] = tuple(a + b for a, b in zip(off, r))
                queue.append(nu)
    return found


def dominant_multiplicities(rs: RootSystem, highest: Weight) -> dict[tuple[int, ...], int]:
    """Freudenthal's recursion for the multiplicities of dominant weights."""
    lam_w = rs.to_weight_basis(highest)
    if not rs.is_dominant(lam_w):
        raise ValidationError(f"highest weight {lam_w.coords} is not dominant", "dominant")
    lam = check_integral(lam_w.coords, "highest weight")
    dom = _dominant_weights_below(rs, lam)
    g = rs.weight_gram
    n = rs.rank

    def ip(a, b):
        return sum((g[i][j] * a[i] * b[j] for i in range(n) if a[i] for j in range(n) if b[j]),
                   Fraction(0))

    pos_root = [tuple(int(x) for x in r.coords) for r in rs.positive_roots]
    pos_dyn = [tuple(int(x) for x in rs.to_weight_basis(r).coords) for r in rs.positive_roots]
    lr = tuple(x + 1 for x in lam)
    norm_lr = ip(lr, lr)

    mult: dict[tuple[int, ...], int] = {lam: 1}

    def mult_of(nu):
        d, _ = rs.dominant_representative(Weight(nu))
        return mult.get(tuple(int(x) for x in d.coords), 0)

    order = sorted(dom, key=lambda mu: (sum(dom[mu]), mu))
    for mu in order[1:]:
        off = dom[mu]
        total = Fraction(0)
        for r, rd in zip(pos_root, pos_dyn):
            k = 1
            while True:
                noff = tuple(a - k * b for a, b in zip(off, r))
                if min(noff) < 0:
                    break
                nu = tuple(a + k * b for a, b in zip(mu, rd))
                m_nu = mult_of(nu)
                if m_nu:
                    total += m_nu * ip(nu, rd)
                k += 1
        mr = tuple(x + 1 for x in mu)
        denom = norm_lr - ip(mr, mr)
        value = 2 * total / denom
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu}")
        mult[mu] = int(value)
    return {mu: m for mu, m in mult.items() if m}


def irreducible_character(rs: RootSystem, highest: Weight) -> Character:
    """Full character of the irreducible module with the given dominant highest weight."""
    weights: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(rs, highest).items():
        for w in rs.weyl_orbit(Weight(tuple(Fraction(x) for x in mu))):
            weights[w] = m
    return Character(rs, weights)


_STD_NODE = {"E6": 1, "E7": 7, "E8": 8, "F4": 4}


def standard_character(rs: RootSystem) -> Character:
    """The smallest fundamental representation (natural representation for classical types)."""
    if len(rs.components) != 1:
        raise ValidationError("std is defined for simple types; use box(...) for products",
                              "simple_type")
    node = _STD_NODE.get(rs.name, 1)
    return irreducible_character(rs, rs.fundamental_weight(node))


def adjoint_character(rs: RootSystem) -> Character:
    return irreducible_character(rs, rs.to_weight_basis(rs.highest_root))


def tensor_char(c1: Character, c2: Character) -> Character:
    if c1.ambient != c2.ambient:
        raise ValidationError(
            f"ambient mismatch: {c1.ambient.name} vs {c2.ambient.name}", "ambient_match")
    out: Counter = Counter()
    for w1, m1 in c1.weights:
        for w2, m2 in c2.weights:
            out[w1 + w2] += m1 * m2
    return Character(c1.ambient, out)


def _power(c: Character, i: int, repeat: bool) -> Character:
    rank = c.ambient.rank
    zero = (Fraction(0),) * rank
    layers: dict[int, Counter] = {0: Counter({zero: 1})}
    for w, m in c.weights:
        new: dict[int, Counter] = defaultdict(Counter)
        for cnt, ctr in layers.items():
            top = i - cnt if repeat else min(m, i - cnt)
            for j in range(top + 1):
                ways = comb(m + j - 1, j) if repeat else comb(m, j)
                shift = tuple(j * x for x in w.coords)
                for v, mv in ctr.items():
                    new[cnt + j][tuple(a + b for a, b in zip(v, shift))] += mv * ways
        layers = new
    return Character(c.ambient, {Weight(v): m for v, m in layers[i].items()})


def exterior_char(c: Character, i: int) -> Character:
    """``i``-th exterior power: sums over ``i``-element sub-multisets of the weights."""
    if not 0 <= i <= c.dim:
        raise ValidationError(f"exterior power index {i} outside [0, {c.dim}]", "index_range")
    if i == 0:
        return trivial_character(c.ambient)
    return _power(c, i, repeat=False)


def sym_char(c: Character, m: int) -> Character:
    """``m``-th symmetric power: sums over size-``m`` multisets with repetition."""
    if m < 0:
        raise ValidationError(f"symmetric power index {m} is negative", "index_range")
    if m == 0:
        return trivial_character(c.ambient)
    return _power(c, m, repeat=True)


def external_tensor(c1: Character, c2: Character) -> Character:
    """Character of ``V1 (x) V2`` for ``G1 x G2``; weight coordinates are concatenated."""
    amb = product_root_system(c1.ambient, c2.ambient)
    out = {}
    for w1, m1 in c1.weights:
        for w2, m2 in c2.weights:
            out[Weight(w1.coords + w2.coords)] = m1 * m2
    return Character(amb, out)


def height_of_char(c: Character) -> Fraction:
    """Maximum of ``2 * height(mu)`` over the dominant weights ``mu`` of the support."""
    rs = c.ambient
    dominant = [w for w in c.support if rs.is_dominant(w)]
    if not dominant:
        raise ValidationError("character support has no dominant weight", "w_stable")
    return max(2 * rs.height(w) for w in dominant)


def is_low_height(c: Character, p) -> bool:
    p = check_prime(p)
    return p == "zero" or height_of_char(c) < p


def tensor_bound_check(n1: int, n2: int, p) -> bool:
    """The rank bound ``n1 + n2 < p + 2`` for tensor products of SL(n1) and SL(n2) modules."""
    if n1 < 1 or n2 < 1:
        raise ValidationError("ranks must be positive", "rank")
    p = check_prime(p)
    return p == "zero" or n1 + n2 < p + 2
