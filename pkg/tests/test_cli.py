import json
import subprocess
import sys

import pytest

from unipotent_flip.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_families_b2(capsys):
    code, out, _ = run(capsys, "families", "--type", "B", "--rank", "2")
    data = json.loads(out)
    assert code == 0
    assert data["n_families"] == 3 and data["n_unipotent"] == 6


def test_degrees_b2_family_1(capsys):
    code, out, _ = run(capsys, "degrees", "--type", "B", "--rank", "2", "--family", "1")
    degs = [d["degree"] for d in json.loads(out)["degrees"]]
    assert code == 0 and len(degs) == 4
    assert degs.count([[1, "1/2"], [3, "1/2"]]) == 2


def test_degrees_by_member_label(capsys):
    a = run(capsys, "degrees", "--type", "B2", "--family", "11.")[1]
    b = run(capsys, "degrees", "--type", "B2", "--family", "1")[1]
    assert a == b


def test_verify_b4(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--type", "B", "--rank", "4")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert len(data["families"]) == 10
    rep = data["families"][1]
    assert set(rep["checks"]) == {"thm1_3", "prop1_4", "thm2_2", "aA"}


@pytest.mark.parametrize("t", ["G2", "F4", "D4"])
def test_verify_exceptional_and_d(capsys, t):
    code, _, _ = run(capsys, "verify", "--all", "--type", t)
    assert code == 0


def test_symbol_and_involution(capsys):
    code, out, _ = run(capsys, "symbol", "--type", "B", "--rank", "2", "--family", "1")
    syms = {s["E"]: s["symbol"] for s in json.loads(out)["symbols"]}
    assert code == 0 and syms["1.1"] == "(0,2|1)"
    assert json.loads(out)["symbols"][0]["family_data"] == {"kind": "B", "n": 2, "Z2": [], "A": [0, 2], "B": [1]}
    code, out, _ = run(capsys, "involution", "--type", "B", "--rank", "2", "--family", "1", "--format", "tsv")
    assert code == 0 and "(0,2|1)\t(|0,1,2)" in out


def test_symbol_pretty_two_rows(capsys):
    _, out, _ = run(capsys, "symbol", "--type", "B2", "--family", "1.1", "--format", "pretty")
    assert "0 2\n 1" in out


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--type", "B", "--rank", "2")
    data = json.loads(out)["expansions"]
    assert code == 0 and len(data) == 5
    assert all(set(d) == {"w", "coefficients"} for d in data)


def test_hecke_check(capsys):
    code, out, _ = run(capsys, "hecke-check", "--type", "B", "--rank", "2", "--v0", "3")
    data = json.loads(out)
    assert code == 0 and data["spectrum"]["scalars"] == ["-81", "1", "81", "6561"]


def test_hecke_gate_is_usage_error(capsys):
    code, _, err = run(capsys, "hecke-check", "--type", "B", "--rank", "3", "--hecke-rank-gate", "10")
    assert code == 2 and "gate" in err


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["families"],
    ["families", "--type", "E", "--rank", "6"],
    ["families", "--type", "B", "--rank", "2", "--format", "xml"],
    ["degrees", "--type", "B", "--rank", "2", "--family", "nope"],
    ["verify", "--type", "B", "--rank", "2"],
    ["symbol", "--type", "G", "--rank", "2"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_dump_and_validate(capsys, tmp_path):
    code, out, _ = run(capsys, "dump-tables")
    assert code == 0
    good = tmp_path / "good.json"
    good.write_text(out)
    assert run(capsys, "dump-tables", "--validate", str(good))[0] == 0
    data = json.loads(out)
    rows = data["types"]["G2"]["irreducibles"]
    rows[0]["b"] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "dump-tables", "--validate", str(bad))
    assert code == 1 and json.loads(out)["problems"]["G2"]


def test_failed_verification_exits_1(capsys, monkeypatch):
    import unipotent_flip.cli as cli

    real = cli.family_report

    def broken(table, fam):
        rep = real(table, fam)
        rep["checks"]["thm2_2"] = {"pass": False, "counterexamples": [{"m": "x"}]}
        return rep

    monkeypatch.setattr(cli, "family_report", broken)
    code, out, _ = run(capsys, "verify", "--family", "1", "--type", "B2")
    assert code == 1
    assert json.loads(out)["families"][0]["checks"]["thm2_2"]["counterexamples"] == [{"m": "x"}]


@pytest.mark.parametrize("fmt", ["json", "tsv", "pretty"])
def test_output_is_byte_stable(fmt):
    argv = [sys.executable, "-m", "unipotent_flip", "degrees", "--type", "G2", "--format", fmt]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
