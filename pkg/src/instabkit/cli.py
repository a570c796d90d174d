"""Command-line interface.

Every subcommand prints one JSON object on stdout. Exit codes: 0 success,
1 domain error (the JSON object carries ``error`` and ``invariant``),
2 usage error, 3 success with an unbounded separability result.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize as ser
from .characters import height_of_char, is_low_height, tensor_bound_check
from .expr import parse_character
from .higgs import check_integrability, dual_higgs, higgs_sections, lambda_act, tensor_higgs
from .instability import (
    METHODS,
    State,
    filtration_index,
    is_semistable,
    kirwan_index_set,
    measure,
    optimal_destabilizer,
    stratum_of,
    weight_filtration,
)
from .roots import parse_type
from .separability import CONVENTIONS, UNBOUNDED, psi_bar, separability_index
from .validation import ValidationError, check_prime, check_rational

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_UNBOUNDED = 0, 1, 2, 3


def _payload(text: str):
    """Inline text, or the contents of a UTF-8 file when prefixed with ``@``."""
    if text.startswith("@"):
        return Path(text[1:]).read_text(encoding="utf-8")
    return text


def _load_json(text: str, what: str):
    try:
        return json.loads(_payload(text))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON for {what}: {exc}", f"{what}_json") from exc


def _is_coord(x) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, (int, str)):
        return True
    return (isinstance(x, list) and len(x) == 2 and all(isinstance(v, int) for v in x)
            and x[1] > 0)


def _is_weight(x, rank: int) -> bool:
    if isinstance(x, dict):
        return "coords" in x
    return isinstance(x, list) and len(x) == rank and all(_is_coord(c) for c in x)


def _parse_state(text: str, rs) -> State:
    """Read ``w1,w2,...`` (each weight a list of rationals) or a JSON list/object of weights."""
    raw = _payload(text).strip()
    if raw.startswith("{"):
        return ser.state_from_json(_load_json(raw, "state"), rs)
    data = _load_json("[" + raw + "]", "state")
    if data and all(_is_weight(x, rs.rank) for x in data):
        weights = data
    elif len(data) == 1 and isinstance(data[0], list) and all(_is_weight(x, rs.rank) for x in data[0]):
        weights = data[0]
    else:
        raise ValidationError(f"cannot read a state of rank-{rs.rank} weights from {raw!r}", "state")
    return State(rs, [ser.weight_from_json(w, rs) for w in weights])


def _parse_weight(text: str, rs):
    return ser.weight_from_json(_load_json(text, "lambda"), rs)


def _root_system(args):
    if args.type is None:
        raise ValidationError("--type is required", "root_system_type")
    t = args.type
    if getattr(args, "rank", None) is not None and t.isalpha():
        t = f"{t}{args.rank}"
    return parse_type(t)


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise ValidationError(f"--{name.replace('_', '-')} is required", name)
    return value


def _character(args, rs=None):
    text = _payload(_need(args, "char"))
    if rs is None and args.type is not None:
        rs = _root_system(args)
    return parse_character(text, rs)


# -- handlers ------------------------------------------------------------------


def cmd_root_show(args):
    rs = _root_system(args)
    out = {
        "type": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "gram": [[ser.rational_to_json(x) for x in r] for r in rs.gram],
        "fund_weights": [[ser.rational_to_json(x) for x in r] for r in rs.fund_weights],
        "positive_roots": [ser.weight_to_json(r) for r in rs.positive_roots],
    }
    if args.weyl_order:
        out["weyl_group_order"] = rs.weyl_group_order()
    return out


def cmd_char_build(args):
    return ser.character_to_json(_character(args))


def cmd_char_height(args):
    return {"height": ser.rational_to_json(height_of_char(_character(args)))}


def cmd_char_lowheight(args):
    c = _character(args)
    p = check_prime(_need(args, "p"))
    return {"low_height": is_low_height(c, p), "height": ser.rational_to_json(height_of_char(c)),
            "p": p}


def _higgs(text):
    return ser.higgs_from_json(_load_json(text, "higgs"))


def cmd_higgs_check(args):
    return {"integrable": check_integrability(_higgs(_need(args, "higgs")))}


def cmd_higgs_tensor(args):
    return ser.higgs_to_json(tensor_higgs(_higgs(_need(args, "higgs")), _higgs(_need(args, "higgs2"))))


def cmd_higgs_dual(args):
    return ser.higgs_to_json(dual_higgs(_higgs(_need(args, "higgs"))))


def cmd_higgs_sections(args):
    return {"sections": [ser.vector_to_json(v) for v in higgs_sections(_higgs(_need(args, "higgs")))]}


def cmd_higgs_act(args):
    h = _higgs(_need(args, "higgs"))
    alpha = [check_rational(x) for x in _load_json(_need(args, "alpha"), "alpha")]
    v = [check_rational(x) for x in _load_json(_need(args, "v"), "v")]
    return {"result": ser.vector_to_json(lambda_act(h, alpha, v))}


def cmd_instab_optimal(args):
    rs = _root_system(args)
    state = _parse_state(_need(args, "state"), rs)
    cert = optimal_destabilizer(state, args.method)
    if cert is None:
        return {"semistable": True}
    if args.certificate:
        cert.verify(state)
        return {"semistable": False, "verified": True, "certificate": ser.certificate_to_json(cert)}
    return {
        "semistable": False,
        "lambda": ser.weight_to_json(cert.lam),
        "lambda_normalized": ser.weight_to_json(cert.lam_normalized),
        "q": ser.rational_to_json(cert.q_value),
    }


def cmd_instab_semistable(args):
    rs = _root_system(args)
    return {"semistable": is_semistable(_parse_state(_need(args, "state"), rs), args.method)}


def cmd_instab_strata(args):
    rs = _root_system(args)
    c = _character(args, rs)
    out = ser.strata_to_json(kirwan_index_set(c, args.guard, args.method))
    if args.state is not None:
        out["stratum"] = ser.weight_to_json(stratum_of(_parse_state(args.state, rs), c, args.method))
    return out


def cmd_instab_filtration(args):
    rs = _root_system(args)
    c = _character(args, rs)
    lam = _parse_weight(_need(args, "lambda_"), rs)
    levels = [
        {"level": ser.rational_to_json(level),
         "weights": [dict(ser.weight_to_json(w), mult=m) for w, m in sorted(part.items(), reverse=True)]}
        for level, part in weight_filtration(c, lam)
    ]
    out = {"levels": levels}
    if args.state is not None:
        out["index"] = ser.rational_to_json(filtration_index(_parse_state(args.state, rs), c, lam))
    return out


def cmd_instab_measure(args):
    rs = _root_system(args)
    state = _parse_state(_need(args, "state"), rs)
    lam = _parse_weight(_need(args, "lambda_"), rs)
    return {"measure": ser.rational_to_json(measure(state, lam))}


def cmd_sep_index(args):
    return ser.report_to_json(separability_index(_character(args), args.guard, args.convention))


def cmd_sep_psibar(args):
    return {"psi_bar": ser.bound_to_json(psi_bar(_character(args), args.guard, args.convention))}


def cmd_bound_tensor(args):
    return {"ok": tensor_bound_check(args.n1, args.n2, check_prime(args.p))}


def cmd_selftest(args):
    from .selftest import run_selftest

    return run_selftest()


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json"], default="json")
    common.add_argument("--type", help="root system type, e.g. A2, G2, A1xA2")
    common.add_argument("--rank", type=int, help="rank, when --type gives only the series")
    common.add_argument("--char", help="character expression or JSON (prefix @ for a file)")
    common.add_argument("--state", help="weights as [num,den] lists, comma separated")
    common.add_argument("--lambda", dest="lambda_", help="one-parameter subgroup as a JSON weight")
    common.add_argument("--p", help="prime characteristic or 'zero'")
    common.add_argument("--certificate", action="store_true")
    common.add_argument("--guard", type=int, default=None)
    common.add_argument("--convention", choices=CONVENTIONS, default="rank")
    common.add_argument("--method", choices=METHODS, default="wolfe")
    common.add_argument("--higgs", help="Higgs structure JSON (prefix @ for a file)")
    common.add_argument("--higgs2", help="second Higgs structure for 'higgs tensor'")
    common.add_argument("--alpha", help="covector on U as a JSON list")
    common.add_argument("--v", help="fiber vector as a JSON list")

    parser = argparse.ArgumentParser(prog="instabkit", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def group(name, actions):
        gp = groups.add_parser(name)
        sub = gp.add_subparsers(dest="action", required=True)
        parsers = {}
        for action, handler in actions.items():
            p = sub.add_parser(action, parents=[common])
            p.set_defaults(handler=handler)
            parsers[action] = p
        return parsers

    root = group("root", {"show": cmd_root_show})
    root["show"].add_argument("--weyl-order", action="store_true")
    group("char", {"build": cmd_char_build, "height": cmd_char_height,
                   "lowheight": cmd_char_lowheight})
    group("higgs", {"check": cmd_higgs_check, "tensor": cmd_higgs_tensor, "dual": cmd_higgs_dual,
                    "sections": cmd_higgs_sections, "act": cmd_higgs_act})
    group("instab", {"optimal": cmd_instab_optimal, "semistable": cmd_instab_semistable,
                     "strata": cmd_instab_strata, "filtration": cmd_instab_filtration,
                     "measure": cmd_instab_measure})
    group("sep", {"index": cmd_sep_index, "psibar": cmd_sep_psibar})
    bound = group("bound", {"tensor": cmd_bound_tensor})
    bound["tensor"].add_argument("--n1", type=int, required=True)
    bound["tensor"].add_argument("--n2", type=int, required=True)
    selftest = groups.add_parser("selftest", parents=[common])
    selftest.set_defaults(handler=cmd_selftest)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        out = args.handler(args)
    except ValidationError as exc:
        stdout.write(ser.dumps({"error": str(exc), "invariant": exc.invariant}) + "\n")
        return EXIT_DOMAIN
    except OSError as exc:
        stdout.write(ser.dumps({"error": str(exc), "invariant": "input_file"}) + "\n")
        return EXIT_DOMAIN
    stdout.write(ser.dumps(out) + "\n")
    if args.handler is cmd_selftest:
        return EXIT_OK if out["failed"] == 0 else EXIT_DOMAIN
    if UNBOUNDED in (out.get("psi"), out.get("psi_bar")):
        return EXIT_UNBOUNDED
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
