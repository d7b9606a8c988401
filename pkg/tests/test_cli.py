import json

import pytest

from cantorkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dim_json_is_deterministic(capsys):
    code1, out1 = run(capsys, "dim", "S(s=3)")
    code2, out2 = run(capsys, "dim", "S(s=3)")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert list(payload)[:7] == [
        "family",
        "alpha",
        "method",
        "residual",
        "bracket",
        "iterations",
        "degenerate",
    ]
    assert abs(payload["alpha"] - 0.4380178794859) <= 1e-10
    assert payload["method"] == "block-root"
    assert payload["residual"] <= 1e-10


def test_dim_md_has_cross_check(capsys):
    code, out = run(capsys, "dim", "MD(s=2)")
    payload = json.loads(out)
    assert code == 0
    assert payload["method"] == "closed-cubic"
    assert abs(payload["alpha"] - payload["cross_check"]) <= 1e-10


def test_dim_degenerate_flag(capsys):
    _, out = run(capsys, "dim", "Su(s=3,u=1)")
    payload = json.loads(out)
    assert payload["degenerate"] is True and payload["alpha"] == 0


def test_dim_cantor_family(capsys):
    code, out = run(capsys, "dim", "Cantor(d=[3],I=[{0,2}])")
    payload = json.loads(out)
    assert code == 0
    assert payload["method"] == "liminf-estimate"
    assert abs(payload["alpha"] - 0.6309297535714) <= 1e-10


def test_verify_exit_zero(capsys):
    code, out = run(capsys, "verify", "Sminus(s=3)", "--depth", "4")
    assert code == 0
    assert "all properties hold" in out
    assert "[pass] interval-vs-oracle" in out


def test_verify_json_format(capsys):
    code, out = run(capsys, "verify", "S(s=3)", "--depth", "3", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] is True
    names = {p["name"] for p in payload["properties"]}
    assert {"interval-vs-oracle", "ratio-law", "sibling-gaps", "ordering"} <= names


def test_eval_and_rationals(capsys):
    _, out = run(capsys, "eval", "Sminus(s=3)", "--alphas", "2,1")
    payload = json.loads(out)
    assert payload["value"] == "-5/27"
    assert payload["digits"] == "0 2 1"


def test_eval_with_tail(capsys):
    _, out = run(capsys, "eval", "S(s=3)", "--alphas", "", "--tail", "2")
    assert json.loads(out)["value"] == "1/4"


def test_cylinder_report(capsys):
    _, out = run(capsys, "cylinder", "S(s=3)", "--addr", "1", "--child", "1")
    payload = json.loads(out)
    assert payload["interval"] == {"lo": "5/12", "hi": "1/2"}
    assert payload["child_ratio"] == "1/3"
    assert payload["orientation"] == "right-to-left"


def test_cover_table(capsys):
    _, out = run(capsys, "cover", "S(s=3)", "--depth", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "depth,exact,float"
    assert lines[1].startswith("0,1/4,")
    assert lines[3].startswith("2,4/81,")


def test_enumerate(capsys):
    _, out = run(capsys, "enumerate", "Su(s=5,u=2)", "--depth", "1")
    assert out.strip().splitlines() == ["1", "3", "4"]


def test_boxcount_csv(capsys):
    code, out = run(capsys, "boxcount", "Blocks(s=3,B=[0;2])", "--scales", "4:10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "eps,count"
    assert lines[1].endswith(",16")
    gap = float(next(l for l in lines if l.startswith("# gap,")).split(",")[1])
    assert gap <= 0.02


def test_blocks_output(capsys):
    _, out = run(capsys, "blocks", "Tilde(s=4)")
    payload = json.loads(out)
    assert payload["count"] == 7
    assert payload["histogram"] == {"1": 1, "2": 3, "3": 3}


def test_convert_round_trip(capsys):
    code, out = run(
        capsys, "convert", "--base", "3", "--digits", "0,2", "--target", "negasadic",
        "--length", "8",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["within_bound"] is True
    assert payload["value"] == "2/9"


def test_verify_failure_reports_address_and_rationals(capsys, monkeypatch):
    # sabotage the whole-set constants: the suite must fail with exit 2 and
    # name a concrete address plus the two conflicting exact values
    from fractions import Fraction

    import cantorkit.cylinders as cyl

    monkeypatch.setattr(cyl, "_nega0_bounds", lambda s: (Fraction(-1, 3), Fraction(1, 5)))
    cyl._HULL_CACHE.clear()
    cyl._LOCAL_CACHE.clear()
    code, out = run(capsys, "verify", "NSu(s=3,u=0)", "--depth", "2")
    assert code == 2
    assert "FAIL" in out and "addr=" in out and "/" in out
    cyl._HULL_CACHE.clear()
    cyl._LOCAL_CACHE.clear()


def test_dim_text_and_csv_formats(capsys):
    code, out = run(capsys, "dim", "S(s=3)", "--format", "text")
    assert code == 0 and out.startswith("family: S(s=3)")
    code, out = run(capsys, "dim", "S(s=3)", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "family,alpha,method,residual,degenerate"


def test_usage_errors_exit_one(capsys):
    assert main(["dim", "Nope(s=3)"]) == 1
    assert main(["dim", "S(s=2)"]) == 1
    assert main(["bogus"]) == 1
    assert main([]) == 1
    # out-of-range conversion is a domain error, not a crash
    assert main(["convert", "--base", "3", "--digits", "1,0,2", "--target", "negasadic"]) == 1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "dim.json"
    code = main(["dim", "S(s=3)", "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text())["family"] == "S(s=3)"
