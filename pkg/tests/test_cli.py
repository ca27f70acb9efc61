import json
import subprocess
import sys

import pytest

from twisted_elliptic.cli import run


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_characters_mod_10(capsys):
    status, out, _ = call(capsys, "characters", "--modulus", "10")
    assert status == 0
    assert "4 characters mod 10" in out
    status, out, _ = call(capsys, "characters", "--modulus", "10", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 4
    evens = [c for c in data["characters"] if c["parity"] == "even" and c["conductor"] == 5]
    assert len(evens) == 1 and evens[0]["values"][3] == "-1"


def test_characters_bad_modulus(capsys):
    status, _, err = call(capsys, "characters", "--modulus", "0")
    assert status == 2 and "usage" in err


def test_expand_eta(capsys):
    status, out, _ = call(capsys, "expand", "--what", "eta", "--factors", "5^5,1^-1", "--q-power", "1", "--order", "8", "--format", "json")
    assert status == 0
    series = json.loads(out)["series"]
    assert series["offset"] == "1"
    assert series["coeffs"][:6] == ["1", "1", "2", "3", "5", "2"]


def test_expand_lambert_and_text(capsys):
    status, out, _ = call(capsys, "expand", "--what", "lambert", "--chi", "kronecker:5", "--power", "1", "--order", "6")
    assert status == 0 and "O(q^6)" in out


def test_expand_qform(capsys):
    status, out, _ = call(capsys, "expand", "--what", "qform", "--form", "1,0,1", "--order", "6", "--format", "json")
    assert status == 0
    series = json.loads(out)["series"]
    assert [int(c) for c in series["coeffs"][:6]] == [1, 4, 4, 0, 4, 8]


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--what", "eta"],
        ["expand", "--what", "eta", "--factors", "garbage"],
        ["expand", "--what", "qform", "--form", "1,2"],
        ["expand", "--what", "eisenstein", "--chi", "kronecker:-4"],
        ["expand", "--what", "lambert", "--chi", "nosuch"],
        ["eval", "--fn", "g", "--tau", "1j", "--chi", "kronecker:-4"],
        ["eval", "--fn", "eta", "--tau", "-1j"],
        ["verify", "--samples", "-1"],
        ["nosuchcommand"],
    ],
)
def test_usage_errors(capsys, argv):
    status, _, err = call(capsys, *argv)
    assert status == 2
    assert err


def test_eval_values(capsys):
    status, out, _ = call(capsys, "eval", "--fn", "eta", "--tau", "1j", "--format", "json")
    assert status == 0
    # eta(i) = Gamma(1/4) / (2 pi^(3/4))
    assert json.loads(out)["value"][0] == pytest.approx(0.768225422326057, rel=1e-14)
    status, out, _ = call(capsys, "eval", "--fn", "g", "--z", "0.3", "--tau", "0.1+1.1i", "--chi", "psi10")
    assert status == 0 and "j" in out


def test_eval_pole_is_an_evaluation_failure(capsys):
    status, _, err = call(capsys, "eval", "--fn", "wp", "--z", "0", "--tau", "1j")
    assert status == 1 and "evaluation failed" in err


def test_verify_exit_codes(capsys):
    status, out, _ = call(capsys, "verify", "--filter", "d5.item5")
    assert status == 1 and "fail" in out
    status, out, _ = call(capsys, "verify", "--filter", "d5.item2,d8.item1")
    assert status == 0
    status, out, _ = call(capsys, "verify", "--filter", "nosuchid")
    assert status == 0 and "0 records" in out


def test_verify_json_is_reproducible(capsys):
    argv = ["verify", "--filter", "g.sine-form", "--samples", "5", "--seed", "4", "--no-timing", "--format", "json"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert first == second
    data = json.loads(first)
    assert data["config"]["seed"] == 4
    assert data["reports"][0]["samples"] == 5
    assert "elapsed_ms" not in data["reports"][0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twisted_elliptic", "characters", "--modulus", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and "4 characters mod 5" in proc.stdout
