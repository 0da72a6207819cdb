import dataclasses
import json
from pathlib import Path

import jsonschema
import pytest

from jtrace import cli, dihedral

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "schemas" / "jtrace-output.schema.json").read_text())


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv",
    [
        ["characters", "--lambda", "3,2", "--mu", "2,2,1"],
        ["coinvariants", "6"],
        ["coinvariants", "5", "--twist", "on"],
        ["omega2", "4"],
        ["omega2", "2"],
        ["trace", "((p1,q1),(p2,q2))"],
        ["trace", "((p1,q1),((p1,q1),p2),q2)"],
        ["vanishing", "--tripods", "2", "--genus", "3", "--seed", "1"],
    ],
)
def test_json_outputs_validate(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)


def test_output_is_byte_stable(capsys):
    _, a, _ = run(capsys, "omega2", "5")
    _, b, _ = run(capsys, "omega2", "5")
    assert a == b
    doc = json.loads(a)
    assert doc["dim"] == 21 == doc["checksum"]


def test_characters_value(capsys):
    _, out, _ = run(capsys, "characters", "--lambda", "2,2", "--mu", "2,2")
    doc = json.loads(out)
    assert doc["value"] == 2 and doc["agree"]


def test_tsv(capsys):
    code, out, _ = run(capsys, "coinvariants", "4", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["partition\tmult", "2,1,1\t1"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["coinvariants", "2"],
        ["coinvariants", "13"],
        ["omega2", "7"],
        ["characters", "--lambda", "3", "--mu", "2"],
        ["characters", "--lambda", "a", "--mu", "1"],
        ["trace", "(p1,q1"],
        ["vanishing", "--tripods", "1"],
        ["selftest", "--only", "nosuchmodule"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "jtrace: error" in err


def test_parse_error_reports_position(capsys):
    _, _, err = run(capsys, "trace", "(p1,x)")
    assert "4" in err


def test_bad_genus_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.GENUS_ENV, "many")
    code, _, _ = run(capsys, "vanishing", "--tripods", "2")
    assert code == 1


def test_genus_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.GENUS_ENV, "2")
    code, out, _ = run(capsys, "vanishing", "--tripods", "2")
    assert code == 0 and json.loads(out)["genus"] == 2


def test_frobenius_disagreement_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "frobenius_character", lambda lam, mu: 99)
    code, _, _ = run(capsys, "characters", "--lambda", "2,1", "--mu", "3")
    assert code == 2


def test_selftest_single_module(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "lietrees")
    assert code == 0
    assert out.strip().startswith("criterion 10 [lietrees] PASS")


def test_fault_injection_names_criterion(capsys, monkeypatch):
    real = dihedral.dihedral_classes

    def untwisted(s):
        t = real(s)
        return dataclasses.replace(t, classes=tuple(dataclasses.replace(c, twist_sign=1) for c in t.classes))

    monkeypatch.setattr(dihedral, "dihedral_classes", untwisted)
    code, out, _ = run(capsys, "selftest", "--only", "dihedral")
    assert code == 2
    assert any(line.startswith("criterion  1 [dihedral] FAIL") for line in out.splitlines())
