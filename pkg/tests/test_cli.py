import io
import json
import subprocess
import sys

import pytest

from instabkit import State, parse_type
from instabkit import serialize as ser
from instabkit.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, json.loads(out.getvalue())


def test_documented_examples():
    assert call("bound", "tensor", "--n1", "2", "--n2", "2", "--p", "3") == (0, {"ok": True})
    assert call("bound", "tensor", "--n1", "3", "--n2", "3", "--p", "3") == (0, {"ok": False})
    code, out = call("instab", "semistable", "--type", "A1", "--state", "[[1,1]],[[-1,1]]")
    assert (code, out) == (0, {"semistable": True})
    code, out = call("sep", "index", "--type", "A1", "--char", "adj")
    assert code == 0
    assert (out["psi"], out["p_t"], out["height"]) == (2, 2, [2, 1])


def test_root_show():
    code, out = call("root", "show", "--type", "G", "--rank", "2", "--weyl-order")
    assert code == 0
    assert out["type"] == "G2" and out["cartan"] == [[2, -1], [-3, 2]]
    assert out["weyl_group_order"] == 12 and len(out["positive_roots"]) == 6


def test_char_commands():
    code, out = call("char", "build", "--type", "A2", "--char", "ext(2,std)")
    assert code == 0 and out["dim"] == 3
    assert call("char", "height", "--type", "A3", "--char", "std")[1] == {"height": [3, 1]}
    code, out = call("char", "lowheight", "--type", "A1", "--char", "adj", "--p", "2")
    assert out["low_height"] is False
    code, out = call("char", "lowheight", "--type", "A1", "--char", "adj", "--p", "zero")
    assert out["low_height"] is True
    code, out = call("char", "height", "--char", "box(std@A1, std@A2)")
    assert out == {"height": [3, 1]}


def test_higgs_commands(tmp_path):
    h = {"dim_v": 2, "dim_u": 2, "theta": [[[[0, 1], [1, 1]], [[0, 1], [0, 1]]],
                                          [[[0, 1], [0, 1]], [[1, 1], [0, 1]]]]}
    text = json.dumps(h)
    assert call("higgs", "check", "--higgs", text) == (0, {"integrable": False})
    path = tmp_path / "h.json"
    path.write_text(text, encoding="utf-8")
    code, dual = call("higgs", "dual", "--higgs", f"@{path}")
    assert dual["theta"][0] == [[[0, 1], [0, 1]], [[-1, 1], [0, 1]]]
    code, back = call("higgs", "dual", "--higgs", json.dumps(dual))
    assert ser.higgs_from_json(back) == ser.higgs_from_json(h)
    code, t = call("higgs", "tensor", "--higgs", text, "--higgs2", text)
    assert t["dim_v"] == 4
    code, out = call("higgs", "sections", "--higgs", text)
    assert out == {"sections": []}
    code, out = call("higgs", "act", "--higgs", text, "--alpha", "[1, 0]", "--v", "[[0,1],1]")
    assert out == {"result": [[1, 1], [0, 1]]}


def test_instab_optimal_and_certificate():
    code, out = call("instab", "optimal", "--type", "A2", "--state", "[1,0],[-1,1]")
    assert code == 0
    assert out["q"] == [1, 6] and out["semistable"] is False
    code, out = call("instab", "optimal", "--type", "A2", "--state", "[1,0],[-1,1]",
                     "--certificate", "--method", "both")
    assert out["verified"] is True
    cert = ser.certificate_from_json(out["certificate"])
    a2 = parse_type("A2")
    cert.verify(State(a2, [a2.weight([1, 0]), a2.weight([-1, 1])]))
    assert call("instab", "optimal", "--type", "A1", "--state", "[1],[-1]")[1] == {"semistable": True}


def test_instab_other_commands():
    code, out = call("instab", "strata", "--type", "A1", "--char", "adj")
    assert [b["beta"]["coords"] for b in out["betas"]] == [[[0, 1]], [[2, 1]]]
    code, out = call("instab", "strata", "--type", "A1", "--char", "std", "--state", "[-1]")
    assert out["stratum"]["coords"] == [[1, 1]]
    lam = json.dumps({"coords": [1], "basis": "coroot"})
    code, out = call("instab", "filtration", "--type", "A1", "--char", "adj", "--lambda", lam)
    assert [lv["level"] for lv in out["levels"]] == [[2, 1], [0, 1], [-2, 1]]
    code, out = call("instab", "measure", "--type", "A1", "--state", "[1],[-1]", "--lambda", lam)
    assert out == {"measure": [-1, 1]}
    code, out = call("instab", "filtration", "--type", "A1", "--char", "adj", "--lambda", lam,
                     "--state", "[2],[0]")
    assert out["index"] == [0, 1]


def test_sep_psibar_and_unbounded_exit():
    assert call("sep", "psibar", "--type", "A2", "--char", "std") == (0, {"psi_bar": 2})
    code, out = call("sep", "index", "--type", "A1", "--char", "triv", "--convention", "literal")
    assert code == 3 and out["psi"] == "unbounded"


@pytest.mark.parametrize("argv,invariant", [
    (["root", "show", "--type", "C2"], "root_system_type"),
    (["root", "show"], "root_system_type"),
    (["char", "lowheight", "--type", "A1", "--char", "std", "--p", "4"], "prime"),
    (["instab", "semistable", "--type", "A1", "--state", "[1,2]"], "state"),
    (["instab", "semistable", "--type", "A1", "--state", "[[1,0]]"], None),
    (["instab", "strata", "--type", "A2", "--char", "adj", "--guard", "5"], "enumeration_guard"),
    (["higgs", "check", "--higgs", "{bad"], "higgs_json"),
    (["higgs", "check", "--higgs", "@/nonexistent/file.json"], "input_file"),
    (["sep", "index", "--type", "A1"], "char"),
])
def test_domain_errors(argv, invariant):
    code, out = call(*argv)
    assert code == 1
    assert set(out) == {"error", "invariant"}
    if invariant is not None:
        assert out["invariant"] == invariant


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run(["instab"], stdout=io.StringIO())
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["sep", "index", "--convention", "other"], stdout=io.StringIO())
    assert exc.value.code == 2


def _subprocess(*argv):
    return subprocess.run([sys.executable, "-m", "instabkit", *argv], capture_output=True)


def test_determinism_and_exit_codes_in_subprocess():
    argv = ["instab", "optimal", "--type", "B2", "--state", "[1,0],[0,1],[-1,2]", "--certificate"]
    first, second = _subprocess(*argv), _subprocess(*argv)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert _subprocess("root", "show", "--type", "X9").returncode == 1
    assert _subprocess("nonsense").returncode == 2


def test_selftest_command():
    code, out = call("selftest")
    assert code == 0 and out["failed"] == 0 and out["passed"] == 8
