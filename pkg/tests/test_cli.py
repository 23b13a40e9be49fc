import json
import subprocess
import sys

import pytest

from mzvlab.cli import main
from mzvlab.index_algebra import IndexCombination
from mzvlab.regularization import RegPolynomial
from mzvlab.smzv import TSeries


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sigma(capsys):
    assert run(capsys, "sigma", "1", "2") == (0, "2*(3)\n", "")


def test_stuffle_shuffle_min(capsys):
    assert run(capsys, "stuffle", "2", "1")[1] == "(3) + (1,2) + (2,1)\n"
    assert run(capsys, "shuffle", "1,2", "3")[1] == "(1,2,3) + (1,3,2) + (3,1,2)\n"
    assert run(capsys, "min", "1", "1", "1,3")[1] == "-3*(6) - 3*(2,4) - 3*(4,2)\n"


def test_json_outputs_round_trip(capsys):
    _, out, _ = run(capsys, "stuffle", "{1,3}^1", "2", "--json")
    assert str(IndexCombination.from_json(out)) == "(1,5) + (3,3) + (1,2,3) + (1,3,2) + (2,1,3)"
    _, out, _ = run(capsys, "reg", "2,1", "--json")
    assert str(RegPolynomial.from_json(out)) == "[-(3) - (1,2)] + [(2)]*T"
    _, out, _ = run(capsys, "smzv", "{1,3}^1", "--order", "3", "--json")
    series = TSeries.from_json(out)
    assert series.order == 3
    assert json.loads(out)["coeffs"][0].startswith("-1.0823232337111381915")
    _, out, _ = run(capsys, "smzv", "1,3", "--order", "2", "--json", "--symbolic")
    assert TSeries.from_json(out).order == 2


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "1,2", "--precision", "30")
    assert code == 0 and out.startswith("1.20205690315959428539973816")
    code, _, err = run(capsys, "eval", "2,1")
    assert code == 2 and "admissible" in err
    code, out, _ = run(capsys, "eval", "2,1", "--regularized", "--precision", "20", "--json")
    assert json.loads(out)["value"].startswith("-2.404113806319188570")


def test_pslq(capsys):
    code, out, _ = run(capsys, "pslq", "zeta(2)", "pi^2", "--json")
    assert code == 0 and json.loads(out)["relation"] == [6, -1]
    code, out, _ = run(capsys, "pslq", "zeta(3)*zeta(2)", "pi^2*zeta(3)")
    assert code == 0 and out.splitlines()[-1] == "6 -1"
    code, out, _ = run(capsys, "pslq", "zeta(3)")
    assert code == 1 and out == "no relation found\n"
    code, _, err = run(capsys, "pslq", "pi", "--precision", "10")
    assert code == 2 and "20" in err
    code, _, err = run(capsys, "pslq", "foo(3)")
    assert code == 2


def test_errors(capsys):
    assert run(capsys, "sigma", "1", "1,,2")[0] == 2
    code, _, err = run(capsys, "verify", "lemma9.9")
    assert code == 2 and "unknown suite" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "lemma2.7")
    assert code == 0 and "1/1 cases passed" in out
    code, out, _ = run(capsys, "verify", "lemma2.4", "--json")
    assert code == 0 and all(c["status"] == "pass" for c in json.loads(out))


def test_verify_with_basis_file(capsys, tmp_path):
    path = tmp_path / "basis.json"
    path.write_text(json.dumps({"generators": [[5, 7]]}))
    code, _, _ = run(capsys, "verify", "lemma2.8", "--basis", str(path))
    assert code == 0


def test_deterministic_output():
    cmd = [sys.executable, "-m", "mzvlab.cli", "smzv", "{3,1}^1", "--json", "--precision", "40"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
