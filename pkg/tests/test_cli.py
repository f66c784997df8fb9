import json
import subprocess
import sys

import pytest

from qfunctor.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_spectrum_table(capsys):
    code, out = run(capsys, "spectrum", "--n", "2", "--d", "2", "--square", "--format", "table")
    assert code == 0
    assert out.splitlines() == ["q^-2, 1", "-1, 3", "-q^2, 3", "q^2, 4", "q^4, 5"]


def test_spectrum_json_and_qvalue(capsys):
    code, out = run(capsys, "spectrum", "--n", "2", "--d", "2", "--format", "json", "--qvalue", "2")
    data = json.loads(out)
    assert data["eigenvalues"] == [
        {"eigenvalue": "-q^-1", "multiplicity": 1, "value": "-1/2"},
        {"eigenvalue": "q", "multiplicity": 3, "value": "2"},
    ]
    assert data["complete"] and data["dimension"] == 4


def test_dims(capsys):
    assert run(capsys, "dims", "--functor", "ext", "--d", "2", "--n", "2") == (0, "1\n")
    assert run(capsys, "dims", "--functor", "div", "--d", "3", "--n", "2") == (0, "4\n")
    assert run(capsys, "dims", "--functor", "gamma", "--d", "2", "--n", "2", "--m", "2") == (0, "10\n")


def test_basis(capsys):
    code, out = run(capsys, "basis", "--m", "2", "--n", "2", "--d", "2")
    lines = out.split()
    assert len(lines) == 10 and lines[0] == "x11*x11" and lines[-1] == "x22*x22"


def test_intertwiners(capsys):
    code, out = run(capsys, "intertwiners", "--m", "2", "--n", "2", "--d", "2", "--format", "json", "--dump")
    data = json.loads(out)
    assert data["dimension"] == 10 and len(data["basis"]) == 10


def test_schur(capsys):
    code, out = run(capsys, "schur", "--lambda", "2,1", "--n", "2")
    assert out.splitlines()[0] == "2"
    code, out = run(capsys, "schur", "--lambda", "2,1", "--n", "3", "--weyl", "--format", "json")
    data = json.loads(out)
    assert data["kind"] == "weyl" and data["dimension"] == 8


def test_det(capsys):
    code, out = run(capsys, "det", "--n", "2")
    assert out.strip() == "x11*x22 + (-q^-1)*x12*x21"
    code, out = run(capsys, "det", "--n", "2", "--qvalue", "1/2")
    assert out.splitlines() == ["1 x11*x22", "-2 x12*x21"]


def test_verify_pass(capsys):
    code, out = run(capsys, "verify", "--suite", "hecke", "--max-n", "3")
    assert code == 0
    assert "[FAIL]" not in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qfunctor import cli
    from qfunctor.report import check

    monkeypatch.setattr(cli, "run_suite", lambda name, n, d: [check("one equals two", 1, 2)])
    code, out = run(capsys, "verify", "--suite", "hecke")
    assert code == 1 and "[FAIL] one equals two" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["schur", "--lambda", "1,2", "--n", "2"],
        ["schur", "--lambda", "a", "--n", "2"],
        ["schur", "--lambda", "2,0", "--n", "2"],
        ["spectrum", "--n", "2", "--d", "3"],
        ["spectrum", "--n", "0", "--d", "2"],
        ["dims", "--functor", "gamma", "--d", "2", "--n", "2"],
        ["dims", "--functor", "ext", "--d", "2", "--n", "2", "--m", "3"],
        ["dims", "--functor", "bogus", "--d", "2", "--n", "2"],
        ["det", "--n", "2", "--qvalue", "0"],
        ["det", "--n", "2", "--qvalue", "x"],
        ["det", "--n", "2", "--format", "xml"],
        ["verify", "--suite", "nope"],
        ["basis", "--m", "2"],
    ],
)
def test_bad_flags_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["det", "--n", "3"],
        ["spectrum", "--n", "2", "--d", "2", "--square"],
        ["schur", "--lambda", "2,1", "--n", "2"],
        ["verify", "--suite", "confluence", "--max-n", "2", "--max-d", "2"],
    ],
)
def test_json_is_canonical_and_deterministic(argv, capsys, tmp_path):
    out_file = tmp_path / "out.json"
    _, first = run(capsys, *argv, "--format", "json", "--out", str(out_file))
    _, second = run(capsys, *argv, "--format", "json")
    assert first == second
    assert dumps(json.loads(first)) + "\n" == first
    assert out_file.read_text() == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qfunctor", "dims", "--functor", "sym", "--d", "2", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
    proc = subprocess.run([sys.executable, "-m", "qfunctor", "dims"], capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr
