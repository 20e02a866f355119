"""End-to-end tests for the command line interface.

Each subcommand is exercised against the shipped data files, checking the
three exit statuses (0 success, 1 failed check, 2 bad input) and that
``--output json`` is byte-for-byte reproducible.
"""

import json
import pathlib
import subprocess
import sys

import pytest

from alexpoly.cli import main

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fox_trefoil_text(capsys):
    code, out, err = run_cli(capsys, "fox", str(DATA / "groups" / "trefoil.json"),
                             "--one")
    assert code == 0
    assert out.strip() == "t^2 - t + 1"
    assert err == ""


def test_fox_free_group_json(capsys):
    code, out, _ = run_cli(capsys, "fox",
                           str(DATA / "groups" / "free_rank_two.json"),
                           "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"alexander": "0", "variables": 2}


def test_zvk_two_lines_text(capsys):
    code, out, _ = run_cli(capsys, "zvk",
                           str(DATA / "two_lines" / "factorization.json"))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("generators:")
    assert lines[-1] == "alexander: t - 1"


def test_zvk_sextic_json(capsys):
    code, out, _ = run_cli(capsys, "zvk",
                           str(DATA / "zariski_sextic" / "factorization.json"),
                           "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["alexander"] == "t^2 - t + 1"
    assert payload["generators"] == ["x1", "x2", "x3", "x4", "x5", "x6"]


def test_closure_hat_marked_torus(capsys):
    code, out, _ = run_cli(capsys, "closure", str(DATA / "torus" / "t22.json"),
                           "--hat")
    assert code == 0
    assert out.strip() == "t - 1"


def test_closure_default_one_variable(capsys):
    code, out, _ = run_cli(capsys, "closure", str(DATA / "torus" / "t33.json"),
                           "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "one-variable"
    assert payload["variables"] == 1


def test_closure_multi_flag(capsys):
    code, out, _ = run_cli(capsys, "closure", str(DATA / "torus" / "t33.json"),
                           "--multi", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "multivariable"
    assert payload["variables"] == 3


def test_curve_sextic_json(capsys):
    code, out, _ = run_cli(capsys, "curve",
                           str(DATA / "zariski_sextic" / "curve.json"),
                           "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 6
    assert payload["curve_components"] == 1
    assert payload["first_betti"] == 13


@pytest.mark.parametrize("name", ["two_lines", "cuspidal_cubic",
                                  "zariski_sextic"])
def test_verify_passes(capsys, name):
    code, out, _ = run_cli(capsys, "verify",
                           str(DATA / name / "curve.json"),
                           str(DATA / name / "factorization.json"))
    assert code == 0
    assert out.strip().endswith("overall: pass")


def test_closure_bare_braid_with_flags(capsys, tmp_path):
    path = tmp_path / "hopf_braid.json"
    path.write_text(json.dumps({"strands": 2, "word": [1, 1]}),
                    encoding="utf-8")
    code, out, _ = run_cli(capsys, "closure", str(path), "--hat", "6",
                           "--marked", "1")
    assert code == 0
    assert out.strip() == "t - 1"

    code, out, _ = run_cli(capsys, "closure", str(path), "--multi")
    assert code == 0
    assert out.strip() == "1"

    code, _, err = run_cli(capsys, "closure", str(path), "--hat", "6",
                           "--marked", "5")
    assert code == 2
    assert "base strand" in err


def test_closure_one_flag_trefoil(capsys):
    code, out, _ = run_cli(capsys, "closure", str(DATA / "torus" / "trefoil.json"),
                           "--one")
    assert code == 0
    assert out.strip() == "t^2 - t + 1"


def test_verify_delta_text_and_generic_infinity(capsys):
    code, out, _ = run_cli(capsys, "verify",
                           str(DATA / "conic_line" / "curve.json"),
                           "--delta", "1", "--infinity", "generic")
    assert code == 0
    assert out.strip().endswith("overall: pass")


def test_verify_delta_factorization_file(capsys):
    code, out, _ = run_cli(capsys, "verify",
                           str(DATA / "zariski_sextic" / "curve.json"),
                           "--delta",
                           str(DATA / "zariski_sextic" / "factorization.json"),
                           "--output", "json")
    assert code == 0
    assert json.loads(out)["alexander"] == "t^2 - t + 1"


def test_verify_delta_presentation_file(capsys):
    code, out, _ = run_cli(capsys, "verify",
                           str(DATA / "two_lines" / "curve.json"),
                           "--delta", str(DATA / "groups" / "trefoil.json"))
    assert code == 1
    assert "overall: fail" in out


def test_verify_infinity_link_file(capsys):
    code, out, _ = run_cli(capsys, "verify",
                           str(DATA / "two_lines" / "curve.json"),
                           str(DATA / "two_lines" / "factorization.json"),
                           "--infinity", str(DATA / "torus" / "t22.json"))
    assert code == 0
    assert out.strip().endswith("overall: pass")


def test_verify_needs_exactly_one_delta_source(capsys):
    code, _, err = run_cli(capsys, "verify",
                           str(DATA / "two_lines" / "curve.json"))
    assert code == 2
    assert "either a factorization file or --delta" in err

    code, _, err = run_cli(capsys, "verify",
                           str(DATA / "two_lines" / "curve.json"),
                           str(DATA / "two_lines" / "factorization.json"),
                           "--delta", "1")
    assert code == 2


def test_verify_wrong_infinity_fails(capsys):
    code, out, _ = run_cli(capsys, "verify",
                           str(DATA / "zariski_sextic" / "curve.json"),
                           str(DATA / "zariski_sextic" / "factorization.json"),
                           "--infinity", "1")
    assert code == 1
    assert "fail" in out


def test_cyclo_success(capsys):
    code, out, _ = run_cli(capsys, "cyclo", "t^2 - t + 1")
    assert code == 0
    assert out.strip() == "Phi_6"


def test_cyclo_product_json(capsys):
    code, out, _ = run_cli(capsys, "cyclo", "t^4 - 3*t^3 + 4*t^2 - 3*t + 1",
                           "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["cyclotomic"] is True
    assert payload["factors"] == {"1": 2, "6": 1}
    assert payload["text"] == "Phi_1^2 * Phi_6"


def test_cyclo_parentheses_rejected(capsys):
    code, _, err = run_cli(capsys, "cyclo", "(t - 1)^2")
    assert code == 2
    assert "parentheses" in err


def test_cyclo_failure(capsys):
    code, out, _ = run_cli(capsys, "cyclo", "t^2 + t + 7")
    assert code == 1
    assert "not a cyclotomic product" in out


def test_cyclo_zero_rejected(capsys):
    code, _, err = run_cli(capsys, "cyclo", "0")
    assert code == 1
    assert "zero polynomial" in err


def test_cyclo_bad_poly_is_input_error(capsys):
    code, _, err = run_cli(capsys, "cyclo", "t^2 +")
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_is_input_error(capsys, tmp_path):
    code, _, err = run_cli(capsys, "zvk", str(tmp_path / "nope.json"))
    assert code == 2
    assert "file not found" in err


def test_invalid_json_is_input_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(capsys, "zvk", str(path))
    assert code == 2
    assert "invalid JSON" in err


def test_wrong_shape_is_input_error(capsys, tmp_path):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps({"strands": "six"}), encoding="utf-8")
    code, _, err = run_cli(capsys, "zvk", str(path))
    assert code == 2
    assert "strands" in err


def test_json_output_is_deterministic(capsys):
    argv = ("verify", str(DATA / "zariski_sextic" / "curve.json"),
            str(DATA / "zariski_sextic" / "factorization.json"),
            "--output", "json")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
    payload = json.loads(first)
    assert payload["ok"] is True
    assert payload["alexander"] == "t^2 - t + 1"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "alexpoly.cli", "cyclo", "t^2 - t + 1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Phi_6" in proc.stdout
