import json
import re
import subprocess
import sys

import pytest

from gaussphi.cli import main
from gaussphi.core import parse_gaussian
from gaussphi.phi import phi


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("value, want", [("90+44i", "11"), ("5", "3"), ("-i", "0"), ("-3-2i", "2"), ("1+i", "1")])
def test_phi(capsys, value, want):
    code, out, _ = run(capsys, "phi", value)
    assert code == 0 and out.strip() == want


def test_phi_zero(capsys):
    code, out, err = run(capsys, "phi", "0")
    assert code == 3 and out == ""
    assert "phi undefined at 0" in err


def test_phi_parse_error(capsys):
    assert run(capsys, "phi", "3+")[0] == 2
    assert run(capsys, "phi", str(2**62))[0] == 2


def test_phi_explain(capsys):
    code, out, _ = run(capsys, "phi", "90+44i", "--explain")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "a = 90, b = 44"
    assert lines[1].startswith("j = 1")
    assert lines[3].startswith("p = 5")
    assert lines[4].startswith("m = 8")
    assert "45 + 22 + 3 = 70 > 64 = w_9" in lines[5]
    assert lines[-1] == "11"


def test_phi_json(capsys):
    _, out, _ = run(capsys, "phi", "90+44i", "--format", "json", "--explain")
    assert json.loads(out) == {"value": "90+44i", "phi": 11, "j": 1, "m": 8, "p": 5, "branch": "HIGH"}


def test_expand(capsys):
    code, out, err = run(capsys, "expand", "5")
    assert code == 0 and out.strip() == "mmmm"
    assert err.strip() == "phi 3"
    _, out, _ = run(capsys, "expand", "90+44i", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"value", "phi", "digits"}
    assert doc["value"] == "90+44i" and doc["phi"] == 11
    assert isinstance(doc["digits"], str) and len(doc["digits"]) == 12
    _, out, _ = run(capsys, "expand", "-i")
    assert out.strip() == "m"


@pytest.mark.parametrize("digits, want", [("mmmm", "5"), ("100", "2i"), ("1n", "i"), ("0", "0")])
def test_eval(capsys, digits, want):
    code, out, _ = run(capsys, "eval", digits)
    assert code == 0 and out.strip() == want


def test_eval_bad_digit(capsys):
    code, _, err = run(capsys, "eval", "1x0")
    assert code == 4 and "bad digit" in err


def test_region_plain(capsys):
    code, out, _ = run(capsys, "region", "--kind", "B", "--n", "1", "--format", "plain")
    assert code == 0 and len(out.splitlines()) == 17
    _, out, _ = run(capsys, "region", "--kind", "S", "--n", "0")
    assert sorted(out.split()) == sorted(["-1", "-i", "i", "1"])


def test_region_json(capsys):
    _, out, _ = run(capsys, "region", "--kind", "B", "--n", "3", "--scheme", "doily", "--format", "json")
    doc = json.loads(out)
    assert all(set(p) == {"re", "im", "layer"} for p in doc)
    assert all(isinstance(p[k], int) for p in doc for k in p)
    pts = [(p["re"], p["im"]) for p in doc]
    assert pts == sorted(pts)
    assert {p["layer"] for p in doc} == {-1, 0, 1, 2, 3}
    _, out, _ = run(capsys, "region", "--kind", "D", "--n", "1", "--format", "json")
    assert {p["layer"] for p in json.loads(out)} == {-1}


def test_region_svg(capsys):
    code, out, _ = run(capsys, "region", "--kind", "B", "--n", "3", "--scheme", "doily", "--format", "svg")
    assert code == 0 and out.startswith("<?xml")
    assert 'version="1.1"' in out and out.rstrip().endswith("</svg>")
    fills = set(re.findall(r'fill="(#[0-9a-f]{6})" data-layer', out))
    assert len(fills) == 4
    # same command twice gives the same bytes
    assert run(capsys, "region", "--kind", "B", "--n", "3", "--scheme", "doily", "--format", "svg")[1] == out


def test_region_preimage(capsys):
    _, out, _ = run(capsys, "region", "--kind", "B", "--n", "1", "--preimage")
    assert len(out.splitlines()) == 12


def test_region_budget(capsys):
    code, _, err = run(capsys, "region", "--kind", "B", "--n", "40")
    assert code == 5 and "error" in err


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--max-n", "8", "--check", "all")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "oracle", "--max-n", "0", "--check", "phi")
    assert code == 0 and "[PASS] phi: 4 checked" in out


def test_oracle_decomp_table(capsys):
    code, out, _ = run(capsys, "oracle", "--max-n", "12", "--check", "decomp", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["ball_sizes"][-1] == 111689 and doc["ball_sizes"][:2] == [5, 17]
    assert all(c["passed"] for c in doc["checks"])


def test_oracle_budget(capsys):
    assert run(capsys, "oracle", "--max-n", "17")[0] == 5


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--count", "0", "--format", "json")
    assert code == 0 and json.loads(out)["results"] == []
    first = json.loads(run(capsys, "bench", "--count", "10", "--seed", "7", "--format", "json")[1])
    second = json.loads(run(capsys, "bench", "--count", "10", "--seed", "7", "--format", "json")[1])
    assert first["stream"] == second["stream"]
    assert first["stream"] != json.loads(run(capsys, "bench", "--count", "10", "--seed", "8", "--format", "json")[1])["stream"]
    assert run(capsys, "bench", "--count", "5", "--backend", "nope")[0] == 2


def test_shell_composition():
    # expand | eval through real processes is the identity
    values = ["90+44i", "5", "-i", "-123456789+987654321i", "0", "7-2i"]
    for v in values:
        digits = subprocess.run(
            [sys.executable, "-m", "gaussphi", "expand", v], capture_output=True, text=True, check=True
        ).stdout.strip()
        back = subprocess.run(
            [sys.executable, "-m", "gaussphi", "eval", digits], capture_output=True, text=True, check=True
        ).stdout.strip()
        assert back == v
        if v != "0":
            assert len(digits) == phi(parse_gaussian(v)) + 1
