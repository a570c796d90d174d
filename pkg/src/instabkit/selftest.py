"""Quick invariant suite run by ``instabkit selftest``."""

from __future__ import annotations

import random
from fractions import Fraction

from .characters import (
    adjoint_character,
    external_tensor,
    height_of_char,
    is_low_height,
    standard_character,
    tensor_bound_check,
)
from .higgs import HiggsStructure, check_integrability, dual_higgs, lambda_act, tensor_higgs
from .instability import State, is_semistable, kirwan_index_set, measure, nearest_point, optimal_destabilizer
from .roots import Weight, build_root_system, parse_type
from .separability import psi_bar, separability_index

_TYPES = ["A1", "A2", "A3", "B2", "C3", "G2"]


def _random_weights(rng, rs, n):
    return [Weight(tuple(Fraction(rng.randint(-15, 15), rng.randint(1, 3)) for _ in range(rs.rank)))
            for _ in range(n)]


def _nearest_point_oracles(rng):
    for _ in range(60):
        rs = parse_type(rng.choice(_TYPES))
        ws = _random_weights(rng, rs, rng.randint(1, 7))
        if nearest_point(rs, ws, "wolfe") != nearest_point(rs, ws, "caratheodory"):
            return False
    return True


def _certificates(rng):
    for _ in range(60):
        rs = parse_type(rng.choice(_TYPES))
        s = State(rs, _random_weights(rng, rs, rng.randint(1, 6)))
        cert = optimal_destabilizer(s)
        if cert is None:
            continue
        cert.verify(s)
        if any(rs.pair(chi, cert.lam) < cert.q_value for chi in s.weights):
            return False
    return True


def _w_stable_semistable(rng):
    for t in _TYPES:
        rs = parse_type(t)
        for c in (standard_character(rs), adjoint_character(rs)):
            if not c.is_w_stable() or not is_semistable(State(rs, c.support)):
                return False
    return True


def _tensor_bound(rng):
    for m in range(2, 7):
        for n in range(2, 7):
            c = external_tensor(standard_character(build_root_system("A", m - 1)),
                                standard_character(build_root_system("A", n - 1)))
            if height_of_char(c) != m + n - 2:
                return False
            for p in (2, 3, 5, 7, 11, 13):
                if tensor_bound_check(m, n, p) != is_low_height(c, p):
                    return False
    return True


def _kirwan(rng):
    a1 = build_root_system("A", 1)
    b_std = set(kirwan_index_set(standard_character(a1)))
    b_adj = set(kirwan_index_set(adjoint_character(a1)))
    return b_std == {a1.weight([0]), a1.weight([1])} and b_adj == {a1.weight([0]), a1.weight([2])}


def _separability(rng):
    a1, a2 = build_root_system("A", 1), build_root_system("A", 2)
    return (
        separability_index(standard_character(a1)).psi == 1
        and separability_index(adjoint_character(a1)).psi == 2
        and separability_index(standard_character(a2)).psi == 2
        and psi_bar(standard_character(a2)) == 2
    )


def _random_matrix(rng, n, lo=-3, hi=3):
    return tuple(tuple(Fraction(rng.randint(lo, hi)) for _ in range(n)) for _ in range(n))


def _higgs(rng):
    for _ in range(40):
        n1, n2, u = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        h1 = HiggsStructure(n1, u, tuple(_random_matrix(rng, n1) for _ in range(u)))
        h2 = HiggsStructure(n2, u, tuple(_random_matrix(rng, n2) for _ in range(u)))
        if dual_higgs(dual_higgs(h1)) != h1:
            return False
        t = tensor_higgs(h1, h2)
        alpha = [Fraction(rng.randint(-3, 3)) for _ in range(u)]
        v = [Fraction(rng.randint(-3, 3)) for _ in range(n1)]
        w = [Fraction(rng.randint(-3, 3)) for _ in range(n2)]
        vw = [x * y for x in v for y in w]
        av, aw = lambda_act(h1, alpha, v), lambda_act(h2, alpha, w)
        rhs = [x * y + z * q for (x, y), (z, q) in
               zip(((x, y) for x in av for y in w), ((x, y) for x in v for y in aw))]
        if list(lambda_act(t, alpha, vw)) != rhs:
            return False
        if n1 == 1 and not tensor_higgs(h1, dual_higgs(h1)).is_zero():
            return False
        if u == 1 and not check_integrability(h1):
            return False
    return True


def _measure_sign(rng):
    a1 = build_root_system("A", 1)
    s = State(a1, [a1.weight([1]), a1.weight([-1])])
    return measure(s, a1.simple_coroot(1)) == -1


CHECKS = {
    "nearest_point_oracles": _nearest_point_oracles,
    "optimality_certificates": _certificates,
    "w_stable_semistable": _w_stable_semistable,
    "tensor_bound": _tensor_bound,
    "kirwan_index_sets": _kirwan,
    "separability_values": _separability,
    "higgs_fiber_algebra": _higgs,
    "measure_sign": _measure_sign,
}


def run_selftest(seed: int = 20240101) -> dict:
    rng = random.Random(seed)
    results = []
    for name, check in CHECKS.items():
        try:
            ok = bool(check(rng))
        except Exception as exc:  # a crashing check counts as a failure
            ok = False
            name = f"{name}: {type(exc).__name__}: {exc}"
        results.append({"name": name, "ok": ok})
    failed = sum(not r["ok"] for r in results)
    return {"passed": len(results) - failed, "failed": failed, "checks": results}
