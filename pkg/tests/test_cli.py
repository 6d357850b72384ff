import json
import subprocess
import sys

import pytest

from ringdna.cli import main

REV8 = ["--n", "8", "--c1", "x^6+x^4+x^2+1:x^5+x:x^6+x^4+x^2+1", "--c2", "x^4+1:x^3+x:x^4+1"]
CODE3 = ["--n", "3", "--c1", "x^2+x+1", "--c2", "x^2+x+1"]
SIG7 = ["--n", "7", "--f1", "x+1", "--f2", "x^6+x^5+x^4+x^3+x^2+x+1"]
SIG8 = ["--n", "8", "--f1", "1+x^2+x^4+x^6", "--f2", "1+x^2+x^4+x^6"]


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.mark.parametrize("n,text", [(8, "(x+1)^8"), (3, "(x+1)(x^2+x+1)"), (1, "(x+1)")])
def test_factor(capsys, n, text):
    status, out, _ = run(capsys, "factor", "--n", str(n))
    assert status == 0
    assert text in out.splitlines()[0]


def test_factor_json(capsys):
    status, out, _ = run(capsys, "factor", "--n", "7", "--format", "json")
    doc = json.loads(out)
    assert status == 0 and doc["divisors"] == 8


def test_check_reversible_passes(capsys):
    status, out, _ = run(capsys, "check", *REV8, "--reversible")
    assert status == 0
    assert "4096" in out


def test_check_constraint_failure_exit_1(capsys):
    # (x+1) is self-reciprocal, but every codeword vanishes at x=1 and (u,u,u) does not
    x1 = ["--n", "3", "--c1", "x+1", "--c2", "x+1"]
    assert run(capsys, "check", *x1, "--reversible")[0] == 0
    status, out, _ = run(capsys, "check", *x1, "--rc")
    assert status == 1 and "(u,...,u)" in out
    status, _, _ = run(capsys, "check", "--n", "7", "--c1", "x^3+x+1", "--c2", "x^3+x+1", "--reversible")
    assert status == 1


def test_sigma_rc_passes(capsys):
    status, out, _ = run(capsys, "check", *SIG7, "--rc")
    assert status == 0
    status, out, _ = run(capsys, "sigma-set", *SIG7, "--rc", "--format", "json")
    assert status == 0 and json.loads(out)["contains_all_u"]


def test_spec_file(capsys, tmp_path):
    path = tmp_path / "code.json"
    path.write_text(json.dumps({"n": 3, "c1": {"g": "x^2+x+1", "p": "0", "a": "x^2+x+1"}, "c2": {"g": "x^2+x+1"}}))
    status, out, _ = run(capsys, "enumerate", "--spec", str(path))
    assert status == 0 and len(out.splitlines()) == 16
    sig = tmp_path / "sig.json"
    sig.write_text(json.dumps({"n": 7, "f1": "x+1", "f2": "x^6+x^5+x^4+x^3+x^2+x+1"}))
    status, _, _ = run(capsys, "check", "--spec", str(sig), "--rc")
    assert status == 0


@pytest.mark.parametrize(
    "doc",
    ["{not json", "[1, 2]", '{"n": 3}', '{"n": 3, "c1": {"g": "x^2+q"}, "c2": {"g": "1"}}',
     '{"n": 4, "c1": {"g": "x+1", "a": "x^2+1"}, "c2": {"g": "x+1"}}'],
)
def test_malformed_spec_exit_2(capsys, tmp_path, doc):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    status, out, err = run(capsys, "check", "--spec", str(path))
    assert status == 2
    assert err.startswith("error:") and out == ""


def test_input_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "check", "--spec", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", "--n", "5")[0] == 2
    assert run(capsys, "check", "--n", "5", "--f1", "x+1")[0] == 2
    assert run(capsys, "sigma-set", "--n", "5", "--f1", "x^2+1", "--f2", "x+1")[0] == 2
    assert run(capsys, "enumerate", *REV8, "--bound", "100")[0] == 2
    assert run(capsys, "enumerate", *CODE3, "--bound", "0")[0] == 2


def test_export_fasta(capsys, tmp_path):
    out_file = tmp_path / "code.fasta"
    status, out, _ = run(capsys, "export", *CODE3, "--format", "fasta", "-o", str(out_file))
    assert status == 0
    lines = out_file.read_text().splitlines()
    assert sum(ln.startswith(">") for ln in lines) == 16
    assert "GGGAAA" in lines


def test_export_zero_code(capsys):
    status, out, _ = run(capsys, "export", "--n", "3", "--c1", "x^3+1", "--c2", "x^3+1", "--format", "fasta")
    lines = out.splitlines()
    assert status == 0 and lines[1:] == ["AAAAAA"] and lines[0].startswith(">")


def test_export_decimal_and_json(capsys):
    status, out, _ = run(capsys, "export", *SIG8, "--format", "decimal")
    values = [int(x) for x in out.split()]
    assert status == 0 and len(values) == 256 and 859024042 in values
    status, out, _ = run(capsys, "export", *CODE3, "--format", "json")
    assert len(json.loads(out)["words"]) == 16


def test_distance(capsys):
    status, out, _ = run(capsys, "distance", *SIG8, "--format", "json")
    doc = json.loads(out)
    assert status == 0
    assert doc["min_distance"] == 4 and doc["griesmer"] == {"attained": False, "satisfied": True, "sum": 6}


def test_construct(capsys):
    status, out, _ = run(capsys, "construct", *REV8, "--format", "json")
    doc = json.loads(out)
    assert status == 0 and len(doc["generating_set"]) == 12


@pytest.mark.parametrize("cmd", [["check", *REV8, "--format", "json"], ["export", *SIG8, "--format", "fasta"],
                                 ["sigma-set", *SIG7], ["reproduce", "table2"]])
def test_deterministic(capsys, cmd):
    first = run(capsys, *cmd)
    second = run(capsys, *cmd)
    assert first == second


@pytest.mark.parametrize("rid", ["table1", "eq7", "ex3.9", "ex4.5", "table2"])
def test_reproduce_passes(capsys, rid):
    status, out, _ = run(capsys, "reproduce", rid)
    assert status == 0
    assert out.startswith(f"{rid}: PASS")


def test_reproduce_table2_count(capsys):
    _, out, _ = run(capsys, "reproduce", "table2")
    assert "16/16 DNA strings match" in out
    _, out, _ = run(capsys, "reproduce", "eq7")
    assert "GATTGGTC" in out


def test_reproduce_decimals_report_typos(capsys):
    status, out, _ = run(capsys, "reproduce", "ex5.7")
    assert status == 1
    assert "254/256 printed entries match, 2 possible typos, 0 missing, 0 extra" in out
    assert "-286390474" in out and "+286370474" in out
    status, out, _ = run(capsys, "reproduce", "ex5.7", "--format", "json")
    doc = json.loads(out)
    assert not doc["passed"]
    assert len(doc["data"]["decimals"]["possible_typos"]) == 2


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "ringdna.cli", "factor", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "(x+1)(x^2+x+1)" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "ringdna.cli"], capture_output=True, text=True)
    assert proc.returncode == 2
