"""Fiberwise linear algebra of Higgs structures.

A Higgs structure on a fiber ``V`` with auxiliary space ``U`` is a map
``theta: V -> V (x) U``. Fixing a basis ``u_1..u_k`` of ``U`` we write
``theta = sum_a theta_a (x) u_a`` and store the component matrices
``theta_a``. The condition ``theta ^ theta = 0`` then says the components
commute pairwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _linalg as la
from .validation import ValidationError, check_square, check_vector


@dataclass(frozen=True)
class HiggsStructure:
    """Component matrices of ``theta`` over a single fiber, exact rationals."""

    dim_v: int
    dim_u: int
    theta: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        if not isinstance(self.dim_v, int) or self.dim_v < 1:
            raise ValidationError("dim_v must be a positive integer", "dim_v")
        if not isinstance(self.dim_u, int) or self.dim_u < 0:
            raise ValidationError("dim_u must be a non-negative integer", "dim_u")
        theta = tuple(self.theta)
        if len(theta) != self.dim_u:
            raise ValidationError(
                f"theta has {len(theta)} components, expected dim_u={self.dim_u}", "theta_count"
            )
        object.__setattr__(
            self, "theta", tuple(check_square(t, self.dim_v, "theta") for t in theta)
        )

    @classmethod
    def from_components(cls, components) -> "HiggsStructure":
        components = list(components)
        if not components:
            raise ValidationError("use HiggsStructure.zero for dim_u = 0", "theta_count")
        return cls(len(components[0]), len(components), tuple(components))

    @classmethod
    def zero(cls, dim_v: int, dim_u: int) -> "HiggsStructure":
        return cls(dim_v, dim_u, tuple(la.zeros(dim_v, dim_v) for _ in range(dim_u)))

    def is_zero(self) -> bool:
        return all(la.is_zero(t) for t in self.theta)


def check_integrability(h: HiggsStructure) -> bool:
    """True iff every pair of components commutes exactly."""
    for a, b in combinations(h.theta, 2):
        if la.matmul(a, b) != la.matmul(b, a):
            return False
    return True


def tensor_higgs(h1: HiggsStructure, h2: HiggsStructure) -> HiggsStructure:
    """Tensor product: component ``a`` is the Kronecker sum ``t1_a (x) I + I (x) t2_a``."""
    if h1.dim_u != h2.dim_u:
        raise ValidationError(
            f"dim_u mismatch: {h1.dim_u} vs {h2.dim_u}", "dim_u_match"
        )
    i1 = la.identity(h1.dim_v)
    i2 = la.identity(h2.dim_v)
    theta = tuple(
        la.add(la.kron(t1, i2), la.kron(i1, t2)) for t1, t2 in zip(h1.theta, h2.theta)
    )
    return HiggsStructure(h1.dim_v * h2.dim_v, h1.dim_u, theta)


def dual_higgs(h: HiggsStructure) -> HiggsStructure:
    """Dual structure on ``V*``: each component becomes its negative transpose."""
    theta = tuple(la.scale(-1, la.transpose(t)) for t in h.theta)
    return HiggsStructure(h.dim_v, h.dim_u, theta)


def stacked_theta(h: HiggsStructure) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(row for t in h.theta for row in t)


def higgs_sections(h: HiggsStructure) -> list[tuple[Fraction, ...]]:
    """Basis of the common kernel of all components (the Higgs sections)."""
    return la.nullspace(stacked_theta(h), h.dim_v)


def lambda_act(h: HiggsStructure, alpha, v) -> tuple[Fraction, ...]:
    """Degree-one action of ``alpha`` in ``U*`` on a fiber vector: ``(sum_a alpha_a theta_a) v``."""
    alpha = check_vector(alpha, h.dim_u, "alpha")
    v = check_vector(v, h.dim_v, "v")
    out = [Fraction(0)] * h.dim_v
    for c, t in zip(alpha, h.theta):
        if c:
            for i, x in enumerate(la.matvec(t, v)):
                out[i] += c * x
    return tuple(out)
