"""JSON encoding of the domain types.

Rationals are always written as ``[numerator, denominator]`` with a positive
denominator; decimals never appear.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .characters import Character
from .higgs import HiggsStructure
from .instability import InstabilityCertificate, ParabolicData, State, StrataIndexSet
from .roots import RootSystem, Weight, parse_type
from .separability import UNBOUNDED, SeparabilityReport
from .validation import ValidationError, check_rational


def rational_to_json(x) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def rational_from_json(obj) -> Fraction:
    return check_rational(obj)


def bound_to_json(x):
    """Encode an integer-or-rational bound, passing ``"unbounded"`` through."""
    if x == UNBOUNDED or isinstance(x, int):
        return x
    return rational_to_json(x)


def bound_from_json(obj):
    if obj == UNBOUNDED or (isinstance(obj, int) and not isinstance(obj, bool)):
        return obj
    return rational_from_json(obj)


def weight_to_json(w: Weight) -> dict:
    return {"coords": [rational_to_json(x) for x in w.coords], "basis": w.basis}


def weight_from_json(obj, rs: RootSystem | None = None) -> Weight:
    """Decode ``{"coords": [...], "basis": ...}`` or a bare coordinate list (weight basis)."""
    if isinstance(obj, dict):
        if "coords" not in obj:
            raise ValidationError("weight object needs a 'coords' field", "weight")
        coords, basis = obj["coords"], obj.get("basis", "weight")
    elif isinstance(obj, list):
        coords, basis = obj, "weight"
    else:
        raise ValidationError(f"cannot read a weight from {obj!r}", "weight")
    w = Weight(tuple(check_rational(x) for x in coords), basis)
    if rs is not None:
        rs.check(w)
    return w


def character_to_json(c: Character) -> dict:
    return {
        "ambient": c.ambient.name,
        "dim": c.dim,
        "weights": [dict(weight_to_json(w), mult=m) for w, m in c.weights],
    }


def character_from_json(obj, rs: RootSystem | None = None) -> Character:
    if "ambient" in obj:
        rs = parse_type(obj["ambient"])
    if rs is None:
        raise ValidationError("character has no ambient type", "ambient")
    items = []
    for entry in obj["weights"]:
        if isinstance(entry, dict):
            items.append((weight_from_json(entry, rs), entry.get("mult", 1)))
        else:
            w, m = entry
            items.append((weight_from_json(w, rs), m))
    c = Character(rs, tuple(items))
    if "dim" in obj and obj["dim"] != c.dim:
        raise ValidationError("declared dim does not match the multiplicities", "dimension")
    return c


def state_to_json(s: State) -> dict:
    return {"ambient": s.ambient.name, "weights": [weight_to_json(w) for w in s.sorted_weights()]}


def state_from_json(obj, rs: RootSystem | None = None) -> State:
    if isinstance(obj, dict):
        rs = parse_type(obj["ambient"]) if "ambient" in obj else rs
        obj = obj["weights"]
    if rs is None:
        raise ValidationError("state has no ambient type", "ambient")
    return State(rs, [weight_from_json(w, rs) for w in obj])


def higgs_to_json(h: HiggsStructure) -> dict:
    return {
        "dim_v": h.dim_v,
        "dim_u": h.dim_u,
        "theta": [[[rational_to_json(x) for x in row] for row in t] for t in h.theta],
    }


def higgs_from_json(obj) -> HiggsStructure:
    try:
        theta = tuple(tuple(tuple(check_rational(x) for x in row) for row in t)
                      for t in obj["theta"])
        return HiggsStructure(obj["dim_v"], obj["dim_u"], theta)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed Higgs structure: {exc}", "higgs_schema") from exc


def vector_to_json(v) -> list:
    return [rational_to_json(x) for x in v]


def parabolic_to_json(p: ParabolicData) -> dict:
    return {
        "zero_roots": [weight_to_json(r) for r in p.zero_roots],
        "positive_part": [weight_to_json(r) for r in p.positive_part],
        "negative_part": [weight_to_json(r) for r in p.negative_part],
    }


def parabolic_from_json(obj) -> ParabolicData:
    return ParabolicData(
        tuple(weight_from_json(r) for r in obj["zero_roots"]),
        tuple(weight_from_json(r) for r in obj["positive_part"]),
        tuple(weight_from_json(r) for r in obj["negative_part"]),
    )


def certificate_to_json(cert: InstabilityCertificate) -> dict:
    return {
        "lambda": weight_to_json(cert.lam),
        "lambda_normalized": weight_to_json(cert.lam_normalized),
        "measure": rational_to_json(cert.measure),
        "q": rational_to_json(cert.q_value),
        "parabolic": parabolic_to_json(cert.parabolic),
    }


def certificate_from_json(obj) -> InstabilityCertificate:
    return InstabilityCertificate(
        lam=weight_from_json(obj["lambda"]),
        lam_normalized=weight_from_json(obj["lambda_normalized"]),
        measure=rational_from_json(obj["measure"]),
        q_value=rational_from_json(obj["q"]),
        parabolic=parabolic_from_json(obj["parabolic"]),
    )


def strata_to_json(b: StrataIndexSet) -> dict:
    return {"betas": [{"beta": weight_to_json(w), "q": rational_to_json(q)} for w, q in b.betas]}


def strata_from_json(obj) -> StrataIndexSet:
    return StrataIndexSet(tuple((weight_from_json(e["beta"]), rational_from_json(e["q"]))
                                for e in obj["betas"]))


def subset_key(sub) -> str:
    return ",".join(str(i) for i in sub)


def report_to_json(r: SeparabilityReport) -> dict:
    return {
        "psi": bound_to_json(r.psi),
        "p_t": r.p_t,
        "height": rational_to_json(r.height),
        "convention": r.convention,
        "g_values": {subset_key(k): v for k, v in r.g_values.items()},
    }


def report_from_json(obj) -> SeparabilityReport:
    gv = {tuple(int(i) for i in k.split(",")): v for k, v in obj["g_values"].items()}
    return SeparabilityReport(
        height=rational_from_json(obj["height"]),
        p_t=bound_from_json(obj["p_t"]),
        psi=bound_from_json(obj["psi"]),
        g_values=gv,
        convention=obj.get("convention", "rank"),
    )


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))
