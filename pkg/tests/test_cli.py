import json
import logging

import pytest

from cycleops.__main__ import run


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in list(root.handlers):
        root.removeHandler(handler)
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)


def _run(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_solve_mt(capsys):
    code, out = _run(capsys, "solve-mt", "--g", "1", "--n", "3")
    assert code == 0
    document = json.loads(out)
    assert document["m"] == 5
    assert document["q"] == ["6", "-3", "1", "0", "0"]


def test_solve_then_verify(tmp_path, capsys):
    certificate = tmp_path / "cert.json"
    assert _run(capsys, "solve-mt", "--g", "2", "--n", "3", "--out", str(certificate))[0] == 0
    code, out = _run(capsys, "verify", str(certificate))
    assert code == 0
    assert json.loads(out)["passed"] is True

    document = json.loads(certificate.read_text(encoding="utf-8"))
    document["q"][0] = str(int(document["q"][0]) + 1)
    certificate.write_text(json.dumps(document), encoding="utf-8")
    code, out = _run(capsys, "verify", str(certificate))
    assert code == 1
    assert json.loads(out)["failed_check"] == "S2:e=1"


def test_verify_parse_error(tmp_path, capsys):
    certificate = tmp_path / "cert.json"
    certificate.write_text('{"kind": "theorem-mt"}', encoding="utf-8")
    assert _run(capsys, "verify", str(certificate))[0] == 3


def test_unsupported_and_invalid(capsys):
    assert _run(capsys, "solve-mt", "--g", "1", "--n", "2")[0] == 2
    assert _run(capsys, "solve-mt", "--g", "1", "--n", "3", "--m", "4")[0] == 2
    assert _run(capsys, "expand", "--m", "3", "--i", "4")[0] == 2


def test_solve_p7(capsys):
    code, out = _run(capsys, "solve-p7", "--g", "3", "--n", "4", "--i", "1", "--m-max", "10")
    assert code == 0
    assert json.loads(out)["exponents"] == []
    code, out = _run(capsys, "solve-p7", "--g", "3", "--n", "4", "--i", "1", "--convention", "beauville")
    assert code == 0
    assert json.loads(out)["exponents"] == [1, 2]
    code, out = _run(capsys, "solve-p7", "--g", "10", "--n", "3", "--i", "1", "--m-max", "4")
    assert code == 1
    assert json.loads(out)["m_max"] == 4


def test_lemma2_scan(capsys):
    code, out = _run(capsys, "lemma2-scan", "--n", "5", "--i", "1", "--m-max", "20")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0]) == {"params": {"n": 5, "i": 1, "m": 6}, "verdict": "non-member", "rank": 5}


def test_independence_scan(capsys):
    code, out = _run(capsys, "independence-scan", "--n-max", "4", "--m-max", "8", "--t", "2")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["params"]["m"] for r in records] == [5, 6, 7, 8, 5, 6, 7, 8]
    assert all(r["verdict"] == "independent" for r in records)


def test_expand(capsys):
    code, out = _run(capsys, "expand", "--m", "5", "--i", "3")
    assert code == 0
    document = json.loads(out)
    assert document["factorized"] == "5*x^1*(1+x)^4 60*x^2*(1+x)^3 60*x^3*(1+x)^2"
    assert document["expanded"] == "5*x^1 80*x^2 270*x^3 320*x^4 125*x^5"


def test_cycle(capsys):
    code, out = _run(capsys, "cycle", "--g", "2", "--q=1,-1,1")
    assert code == 0
    report = json.loads(out)
    assert report["certified"] is True
    assert [c["status"] for c in report["components"]] == ["zero", "smash-nilpotent-by-skewness"]
    assert _run(capsys, "cycle", "--g", "1", "--q=1,0,0")[0] == 1
    assert _run(capsys, "cycle", "--g", "1", "--q=1.5,0")[0] == 2


def test_config_file(tmp_path, capsys):
    config_file = tmp_path / "cycleops.yml"
    config_file.write_text("indent: 0\nworkers: 2\n", encoding="utf-8")
    code, out = _run(capsys, "--config", str(config_file), "solve-mt", "--g", "1", "--n", "3")
    assert code == 0
    assert len(out.splitlines()) == 1
    assert _run(capsys, "--config", str(tmp_path / "absent.yml"), "solve-mt", "--g", "1", "--n", "3")[0] == 2


def test_outputs_are_byte_identical_across_runs(capsys):
    commands = [
        ["solve-mt", "--g", "2", "--n", "4"],
        ["solve-p7", "--g", "5", "--n", "5", "--i", "1"],
        ["lemma2-scan", "--n", "6", "--i", "2", "--m-max", "12", "--all"],
        ["independence-scan", "--n-max", "5", "--m-max", "9"],
        ["expand", "--m", "7", "--i", "4"],
        ["cycle", "--g", "3", "--q=6,-3,1,0,0"],
    ]
    first = [_run(capsys, *command) for command in commands]
    second = [_run(capsys, *command) for command in commands]
    assert first == second
    assert all(out for _, out in first)


def test_unwritable_output(tmp_path, capsys):
    missing = str(tmp_path / "missing" / "out.json")
    assert _run(capsys, "solve-mt", "--g", "1", "--n", "3", "--out", missing)[0] == 2
    assert _run(capsys, "lemma2-scan", "--n", "5", "--i", "1", "--m-max", "20", "--out", missing)[0] == 2
