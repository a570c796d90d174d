"""Torus instability: measures, optimal destabilizers, parabolics and strata.

A one-parameter subgroup is passed either in coroot coordinates or already
identified with a character through the invariant form (weight or root
basis). All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .characters import Character
from .nearest import nearest_point_caratheodory, nearest_point_wolfe
from .roots import RootSystem, Weight
from .validation import ValidationError, check_guard

METHODS = ("wolfe", "caratheodory", "both")


@dataclass(frozen=True)
class State:
    """The set of weights occurring with non-zero coefficient in a vector."""

    ambient: RootSystem
    weights: frozenset

    def __init__(self, ambient: RootSystem, weights: Iterable[Weight]):
        ws = frozenset(ambient.to_weight_basis(w) for w in weights)
        if not ws:
            raise ValidationError("a state must contain at least one weight", "state_nonempty")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "weights", ws)

    def sorted_weights(self) -> list[Weight]:
        return sorted(self.weights, reverse=True)


@dataclass(frozen=True)
class ParabolicData:
    """Roots of ``G`` split by the sign of their pairing with ``lambda``."""

    zero_roots: tuple[Weight, ...]
    positive_part: tuple[Weight, ...]
    negative_part: tuple[Weight, ...]

    @property
    def is_whole_group(self) -> bool:
        return not self.positive_part and not self.negative_part

    @property
    def roots(self) -> tuple[Weight, ...]:
        """Roots of ``P_lambda``: the Levi roots and the unipotent radical."""
        return self.zero_roots + self.positive_part


@dataclass(frozen=True)
class InstabilityCertificate:
    lam: Weight
    lam_normalized: Weight
    measure: Fraction
    q_value: Fraction
    parabolic: ParabolicData

    def verify(self, state: State) -> None:
        """Recompute every certified identity; raise ``ValidationError`` on mismatch."""
        rs = state.ambient
        checks = {
            "q_positive": self.q_value > 0,
            "q_value": rs.q(self.lam) == self.q_value,
            "measure_equals_q": measure(state, self.lam) == self.q_value == self.measure,
            "normalized_measure_one": measure(state, self.lam_normalized) == 1,
            "normalization": rs.to_weight_basis(self.lam) / self.q_value
            == rs.to_weight_basis(self.lam_normalized),
            "nearest_point": nearest_point(rs, state.weights, "caratheodory")
            == rs.to_weight_basis(self.lam),
            "parabolic": parabolic_of(rs, self.lam) == self.parabolic,
        }
        bad = [k for k, ok in checks.items() if not ok]
        if bad:
            raise ValidationError(f"certificate check failed: {', '.join(bad)}", bad[0])


@dataclass(frozen=True)
class StrataIndexSet:
    """Dominant minimal combinations of weights, each with its squared norm."""

    betas: tuple[tuple[Weight, Fraction], ...]

    def __contains__(self, beta: Weight) -> bool:
        return any(b == beta for b, _ in self.betas)

    def __iter__(self):
        return (b for b, _ in self.betas)

    def __len__(self) -> int:
        return len(self.betas)


def _check_ambient(rs: RootSystem, other: RootSystem) -> None:
    if rs != other:
        raise ValidationError(f"ambient mismatch: {rs.name} vs {other.name}", "ambient_match")


def measure(state: State, lam: Weight) -> Fraction:
    """``m(v, lambda)``: the least pairing of a state weight with ``lambda``."""
    rs = state.ambient
    rs.check(lam)
    return min(rs.pair(chi, lam) for chi in state.weights)


def nearest_point(rs: RootSystem, weights: Iterable[Weight], method: str = "wolfe") -> Weight:
    """Point of the convex hull of ``weights`` closest to the origin.

    ``method="both"`` runs the two independent algorithms and raises if they
    disagree.
    """
    pts = [rs.to_weight_basis(w).coords for w in weights]
    if not pts:
        raise ValidationError("nearest point of an empty set", "state_nonempty")
    g = rs.weight_gram
    if method == "wolfe":
        p = nearest_point_wolfe(pts, g)
    elif method == "caratheodory":
        p = nearest_point_caratheodory(pts, g)
    elif method == "both":
        p = nearest_point_wolfe(pts, g)
        if p != nearest_point_caratheodory(pts, g):
            raise ArithmeticError("nearest-point algorithms disagree")
    else:
        raise ValidationError(f"unknown method {method!r}; expected one of {METHODS}", "method")
    return Weight(p)


def parabolic_of(rs: RootSystem, lam: Weight) -> ParabolicData:
    """Sign partition of the roots against ``lambda``.

    For ``lambda = 0`` every root lands in ``zero_roots``: the parabolic is
    the whole group.
    """
    zero, pos, neg = [], [], []
    for r in rs.roots:
        v = rs.pair(r, lam)
        (zero if v == 0 else pos if v > 0 else neg).append(r)
    return ParabolicData(tuple(zero), tuple(pos), tuple(neg))


def optimal_destabilizer(state: State, method: str = "wolfe") -> InstabilityCertificate | None:
    """Torus-optimal destabilizing direction, or ``None`` when the state is semistable."""
    rs = state.ambient
    lam = nearest_point(rs, state.weights, method)
    if lam.is_zero():
        return None
    q = rs.q(lam)
    return InstabilityCertificate(
        lam=lam,
        lam_normalized=lam / q,
        measure=measure(state, lam),
        q_value=q,
        parabolic=parabolic_of(rs, lam),
    )


def is_semistable(state: State, method: str = "wolfe") -> bool:
    return nearest_point(state.ambient, state.weights, method).is_zero()


def weight_filtration(c: Character, lam: Weight) -> list[tuple[Fraction, dict[Weight, int]]]:
    """Weight spaces of ``c`` grouped by their pairing with ``lambda``, highest level first."""
    rs = c.ambient
    rs.check(lam)
    levels: dict[Fraction, dict[Weight, int]] = {}
    for w, m in c.weights:
        levels.setdefault(rs.pair(w, lam), {})[w] = m
    return sorted(levels.items(), key=lambda kv: kv[0], reverse=True)


def filtration_index(state: State, c: Character, lam: Weight) -> Fraction:
    """Largest level ``q`` with the state inside ``V^q = sum_{i >= q} V_i``."""
    _check_ambient(state.ambient, c.ambient)
    levels = weight_filtration(c, lam)
    inside: set = set()
    for level, part in levels:
        inside.update(part)
        if state.weights <= inside:
            return level
    raise ValidationError("state is not contained in the character's support", "state_in_support")


def _check_subset_count(n: int, guard: int | None) -> None:
    check_guard((1 << n) - 1, guard)


def kirwan_index_set(c: Character, guard: int | None = None, method: str = "wolfe") -> StrataIndexSet:
    """Dominant representatives of the nearest points of all non-empty subsets of the support."""
    rs = c.ambient
    support = list(c.support)
    _check_subset_count(len(support), guard)
    found: dict[Weight, Fraction] = {}
    for k in range(1, len(support) + 1):
        for sub in combinations(support, k):
            p = nearest_point(rs, sub, method)
            beta, _ = rs.dominant_representative(p)
            if beta not in found:
                found[beta] = rs.q(beta)
    betas = sorted(found.items(), key=lambda kv: (kv[1], kv[0]))
    return StrataIndexSet(tuple(betas))


def stratum_of(state: State, c: Character, method: str = "wolfe") -> Weight:
    """Index ``beta`` of the stratum containing the state; ``beta = 0`` means semistable."""
    _check_ambient(state.ambient, c.ambient)
    if not state.weights <= set(c.support):
        raise ValidationError("state is not contained in the character's support", "state_in_support")
    beta, _ = state.ambient.dominant_representative(nearest_point(state.ambient, state.weights, method))
    return beta
