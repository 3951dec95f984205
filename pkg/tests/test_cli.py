import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from weylflop.artin import NormalForm
from weylflop.cli import main, run
from weylflop.family import generic_section, section_from_json, section_to_json
from weylflop.folding import parse_folding
from weylflop.rootsystem import diagram_from_json, roots_from_json


def payload(argv):
    code, res = run(argv)
    assert code == 0, res
    assert res["status"] == "ok"
    return res["payload"]


def test_fold_excluded_case():
    code, res = run(["fold", "A", "4", "--auto", "(1 4)(2 3)"])
    assert code == 3
    assert res["status"] == "excluded-case"


def test_braid_eq():
    assert payload(["braid", "eq", "--diagram", "A", "2", "1 2 1", "2 1 2"])["equal"] is True
    assert payload(["braid", "eq", "--diagram", "A", "2", "1", "1 1"])["equal"] is False


def test_braid_nf_with_inverse():
    p = payload(["braid", "nf", "--diagram", "B", "3", "--", "-1 2 1"])
    assert p["left_weighted"]
    nf = NormalForm.from_json(p["normal_form"])
    assert nf.infimum == -1


def test_family_braidcheck():
    p = payload(["family", "braidcheck", "--fold", "trivial:A2", "--i", "1", "--j", "2", "--seed", "7"])
    assert p["ok"] and p["passed"] == 1
    assert all(p["verdicts"][0]["checks"].values())


def test_braidcheck_env_seed(monkeypatch):
    monkeypatch.setenv("WEYLFLOP_SEED", "7")
    a = payload(["family", "braidcheck", "--fold", "trivial:A2", "--i", "1", "--j", "2"])
    b = payload(["family", "braidcheck", "--fold", "trivial:A2", "--i", "1", "--j", "2", "--seed", "7"])
    assert a == b


def test_braidcheck_trials():
    p = payload(["family", "braidcheck", "--fold", "A3/(1 3)", "--i", "1", "--j", "2", "--seed", "1", "--trials", "10"])
    assert p["passed"] == 10 and p["ok"]
    assert [v["trial"] for v in p["verdicts"]] == list(range(10))


def test_usage_errors():
    code, res = run(["fold", "A", "3", "--auto", "(1 3)", "--bogus"])
    assert code == 2 and "--bogus" in res["payload"]["message"]
    code, res = run(["family", "flop", "--section", "/nonexistent.json", "--node", "1"])
    assert code == 2 and "--section" in res["payload"]["message"]
    code, res = run(["mckay", "cyclic"])
    assert code == 2
    code, _ = run([])
    assert code == 2


def test_domain_error_codes():
    assert run(["diagram", "E", "9"])[1]["status"] == "invalid-type-rank"
    assert run(["fold", "A", "3", "--auto", "(1 2)"])[1]["status"] == "not-label-preserving"


def test_diagram_and_roots_round_trip():
    d = diagram_from_json(payload(["diagram", "F", "4"])["diagram"])
    assert d.name == "F4"
    system = roots_from_json(payload(["roots", "G", "2"]))
    assert len(system.positive) == 6


def test_fold_payload():
    p = payload(["fold", "D", "4", "--auto", "(1 3 4)"])
    assert p["folding"]["xi"] == "G2"
    assert p["folded_braid"]["ok"]
    assert parse_folding(p["folding"]).descriptor() == "D4/(1 3 4)"
    p = payload(["fold", "A", "3", "--auto", "(1 3)"])
    assert p["invariant_root_count"] == 2 and len(p["xi_positive_roots"]) == 4


def test_mckay_payload():
    p = payload(["mckay", "binary-tetrahedral"])
    assert p["classification"]["delta"] == "E6"


@pytest.fixture
def section_file(tmp_path):
    f = parse_folding("A3/(1 3)")
    from weylflop.family import default_base

    s = generic_section(f, default_base(f), 5).section
    path = tmp_path / "s.json"
    path.write_text(json.dumps(section_to_json(s)))
    return path, s


def test_family_curves_general_flop(section_file):
    path, s = section_file
    p = payload(["family", "curves", "--section", str(path)])
    assert section_from_json(p["section"]) == s
    assert p["configuration"]["general"]
    assert payload(["family", "general", "--section", str(path)]) == {"general": True}
    f = payload(["family", "flop", "--section", str(path), "--node", "2"])
    assert [e["root"] for e in f["flopped"]] == [[0, 1]]
    target = section_from_json(f["target_section"])
    assert target != s


def test_deterministic_payload(section_file):
    path, _ = section_file
    a = json.dumps(run(["family", "curves", "--section", str(path)])[1]["payload"], sort_keys=True)
    b = json.dumps(run(["family", "curves", "--section", str(path)])[1]["payload"], sort_keys=True)
    assert a == b


def test_render_outputs_valid_svg(section_file, tmp_path):
    path, _ = section_file
    out = tmp_path / "c.svg"
    payload(["render", "config", "--section", str(path), "--out", str(out)])
    assert ET.parse(out).getroot().tag.endswith("svg")
    out2 = tmp_path / "d.svg"
    payload(["render", "diagram", "--fold", "E6/(1 5)(2 4)", "--out", str(out2)])
    root = ET.parse(out2).getroot()
    assert len([e for e in root if e.tag.endswith("rect")]) == 1 + 4


def test_main_prints_sorted_json(capsys):
    code = main(["diagram", "A", "2"])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    assert list(data) == sorted(data)
    assert out.strip() == json.dumps(data, sort_keys=True, indent=2)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "weylflop", "fold", "A", "4", "--auto", "(1 4)(2 3)"], capture_output=True, text=True)
    assert res.returncode == 3
    assert json.loads(res.stdout)["status"] == "excluded-case"
