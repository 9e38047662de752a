import json
from fractions import Fraction

import pytest

from axial import catalog as cat
from axial.algebra import Algebra
from axial.cli import load_algebra, main, parse_params, parse_vector
from axial.errors import ParseError
from axial.field import param


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_grading_law_d(capsys):
    code, out, _ = run(capsys, "grading", "@law_d")
    assert code == 0
    assert out.strip() == "C3; g_1 -> 0, g_a -> 1, g_b -> 2 (mod 3)"


def test_specialize_refuses_alpha_one(capsys):
    code, out, err = run(capsys, "specialize", "@2B", "--params", "a=1")
    assert code == 2
    assert "a - 1" in err and "precondition" in err


def test_specialize_refuses_certificate_zero(capsys):
    code, _, err = run(capsys, "specialize", "@2B", "--params", "a=0")
    assert code == 2 and "certificate" in err


def test_specialize_writes_checkable_file(capsys, tmp_path):
    path = tmp_path / "b.json"
    code, _, _ = run(capsys, "specialize", "@3A-half", "--params", "a=1/4,x=7/3", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "check-axis", str(path))
    assert code == 0 and out.count("PASS") == 2


def test_check_axis_reports_certificate(capsys):
    code, out, _ = run(capsys, "check-axis", "@3A-half", "--axis", "0", "--law", "@law_a",
                       "--params", "b=1/2")
    assert code == 0
    assert "axis a0: PASS" in out and "certificate:" in out


def test_check_axis_failure_exit(capsys):
    code, out, _ = run(capsys, "check-axis", "@D-tabulated", "--params", "a=3")
    assert code == 1 and "violation" in out


def test_export_round_trip(capsys, tmp_path):
    for name in ("2B", "3A-generic", "D-beta-half"):
        path = tmp_path / f"{name}.json"
        assert run(capsys, "export", name, "-o", str(path))[0] == 0
        loaded = load_algebra(str(path))
        ref = load_algebra("@" + name)
        assert loaded.algebra == ref.algebra
        assert loaded.axes == ref.axes


def test_json_is_deterministic(capsys):
    args = ("verify", "--suite", "gradings", "--suite", "square", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    data = json.loads(first)
    names = [c["name"] for c in data["checks"]]
    assert names == sorted(names)


def test_verify_relators_short_words(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "relators", "--max-len", "2")
    assert code == 0 and "0 fail" in out


def test_verify_corrupted_override(capsys, tmp_path):
    d = cat.alg_2B().algebra.to_dict()
    d["products"]["a0,a1"] = {"a0": "a", "a1": "a+1"}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"2B": d}))
    code, out, _ = run(capsys, "verify", "--override", str(path), "--suite", "entries")
    assert code == 1
    assert "entries/2B" in out and "FAILED" in out


def test_override_unknown_entry(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"nope": {}}))
    code, _, err = run(capsys, "verify", "--override", str(path))
    assert code == 2 and "unknown entry" in err


def test_minimal_law_command(capsys):
    code, out, _ = run(capsys, "minimal-law", "@2B", "--params", "a=-1")
    assert code == 0 and "C2" in out


def test_quotient_command(capsys):
    code, out, _ = run(capsys, "quotient", "@2B", "a0 - a1", "--params", "a=1/2")
    assert code == 0
    assert out.startswith("ideal dimension 1; quotient dimension 1")


def test_ideal_table_command(capsys):
    code, out, _ = run(capsys, "ideals", "--table", "D-beta-half", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["status"] for r in rows] == ["pass", "pass"]


def test_ideal_table_failing_rows_exit_one(capsys):
    code, out, _ = run(capsys, "ideals", "--table", "3A")
    assert code == 1
    assert "FAIL  <vb> | b=1/2, x=a/(a-1)" in out


def test_relators_command(capsys):
    code, out, _ = run(capsys, "relators", "@2B", "--max-len", "3")
    assert code == 0 and "0 failed" in out


def test_parse_params():
    assert parse_params("a=1/3, x=-2") == {"a": Fraction(1, 3), "x": Fraction(-2)}
    with pytest.raises(ParseError):
        parse_params("a=b")
    with pytest.raises(ParseError):
        parse_params("a")


def test_parse_vector():
    alg = cat.alg_2B().algebra
    v = parse_vector(alg, "a0 - a*a1/2")
    assert v == alg.vec([1, -param("a") / 2])
    with pytest.raises(ParseError):
        parse_vector(alg, "a0*a1")


def test_bad_file(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "check-axis", str(path), "--law", "@law_a")
    assert code == 2 and "ParseError" in err
