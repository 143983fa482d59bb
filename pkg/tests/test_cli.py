import json
import subprocess
import sys
from pathlib import Path

import pytest

from lieclass.cli import read_scaling, run_command

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv):
    return run_command([str(a) for a in argv])


def test_class_on_heis5():
    code, out, _ = run("class", SAMPLES / "heis5.lie", "--form", "w5")
    assert code == 0
    assert "  class: 5\n" in out and "  orbit_dim: 4\n" in out


def test_index_on_q8():
    code, out, _ = run("index", SAMPLES / "Q8.lie", "--json")
    data = json.loads(out)
    assert code == 0 and data["results"]["index"] == 2 and data["results"]["max_class"] == 7


def test_verify_kaplan7():
    code, out, _ = run("verify", "--catalog", "kaplan7", "--json")
    data = json.loads(out)
    assert code == 0 and data["results"]["all_passed"]
    assert data["results"]["claims"]["char_sequence"]["observed"] == [2, 2, 2, 1]
    assert data["provenance"]["char_sequence"]


def test_verify_negative_verdict_exits_one():
    code, out, _ = run("verify", "--catalog", "n84")
    assert code == 1 and "counterexample w4 + w6" in out


def test_text_and_json_carry_the_same_tree():
    _, text, _ = run("charseq", "--catalog", "h_p2", "--param", "p=2")
    _, js, _ = run("charseq", "--catalog", "h_p2", "--param", "p=2", "--json")
    data = json.loads(js)
    assert data["results"]["char_sequence"] == [2, 2, 1, 1, 1, 1]
    assert "char_sequence:\n    [2, 2, 1, 1, 1, 1]" in text


def test_reports_are_deterministic():
    a = run("spectrum", "--catalog", "n81", "--seed", "9", "--budget", "40")
    b = run("spectrum", "--catalog", "n81", "--seed", "9", "--budget", "40")
    assert a == b and a[0] == 0


def test_rationals_rendered_as_fractions():
    code, out, _ = run("class", "--catalog", "g4", "--form", "3/2*w1 - a2")
    assert code == 0 and "3/2 * w1" in out


def test_check_reports_jacobi_failure(tmp_path):
    f = tmp_path / "bad.lie"
    f.write_text("algebra bad dim 3 basis a b c\n[a,b] = c\n[c,a] = a\n")
    code, out, _ = run("check", f, "--json")
    data = json.loads(out)
    assert code == 1 and data["results"]["jacobi"] is False
    assert data["results"]["violations"][0]["triple"] == ["a", "b", "c"]


def test_parse_error_exit_two(tmp_path):
    f = tmp_path / "bad.lie"
    f.write_text("mc h3 dim 3 forms w1 w2 w3\nd w3 = w1 ^ w9\n")
    code, out, err = run("class", f, "--form", "w1")
    assert code == 2 and not out
    assert f"{f}:2:13: semantic error: undeclared form w9" in err


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["class", "--catalog", "heisenberg"],
    ["class", "--catalog", "heisenberg", "--form", "0*w1"],
    ["index", "--catalog", "nope"],
    ["index", "--catalog", "L", "--param", "n=x"],
    ["index", "--catalog", "L", "--seed", "-1"],
    ["charseq", "--catalog", "sl2"],
    ["index"],
])
def test_input_errors_exit_two(argv):
    code, out, err = run(*argv)
    assert code == 2 and err.startswith("error:") and not out


def test_inconsistent_entry_is_a_report():
    code, out, _ = run("check", "--catalog", "strict_decreasing", "--param", "variant=n2",
                       "--param", "reading=verbatim", "--json")
    data = json.loads(out)
    assert code == 1
    assert data["results"]["paper_inconsistency"]["defects"]


def test_contract_with_scaling_file(tmp_path):
    code, out, _ = run("contract", SAMPLES / "sl2.lie", "--scaling", SAMPLES / "sl2_to_h3.scaling",
                       "--target", SAMPLES / "h3.mc.lie", "--json")
    lim = json.loads(out)["results"]["limit"]
    assert code == 0 and lim["exists"] and lim["nilpotent"] and lim["equals_target"]
    f = tmp_path / "s.txt"
    f.write_text("t^-1 1 1\n")
    code, out, _ = run("contract", SAMPLES / "sl2.lie", "--scaling", f, "--json")
    lim = json.loads(out)["results"]["limit"]
    assert code == 0 and not lim["exists"] and lim["worst_exponent"] == -1


def test_contract_search():
    code, out, _ = run("contract", SAMPLES / "sl2.lie", "--target", SAMPLES / "h3.mc.lie", "--json")
    assert code == 0 and json.loads(out)["results"]["search"]["exponents"] is not None


def test_read_scaling():
    f = read_scaling("t t\n# comment\nt^2\n1 2: 3*t\n", 3)
    assert f.dim == 3 and not f.is_diagonal()


def test_extend_and_deform_check():
    code, out, _ = run("extend", "--catalog", "g4", "--theta", "w1^w2 + a1^a2", "--json")
    assert code in (0, 1)
    data = json.loads(out)["results"]
    assert "theta" in data
    code, out, _ = run("deform-check", "--catalog", "heisenberg", "--param", "p=1",
                       "--phi1", "[X3,X1] = 2*X1; [X3,X2] = -2*X2", "--json")
    res = json.loads(out)["results"]
    assert code == 0 and res["passed"] and res["t1"]["solvable"] is False


def test_catalog_listing():
    code, out, _ = run("catalog", "--json")
    data = json.loads(out)
    assert code == 0 and "kaplan7" in json.dumps(data)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "lieclass", "contact", "--catalog", "so3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "contact: true" in out.stdout
