import pytest

from wreath_hochschild import cli
from wreath_hochschild.presets_io import CheckReport, load_preset, parse
from wreath_hochschild.wreath import generating_series_product


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_plain(capsys):
    code, out, _ = run(capsys, "series", "--preset", "weyl", "--group", "A",
                       "--max-q", "3", "--max-t", "6")
    assert code == 0
    assert out.splitlines() == [
        "series truncated at q^3, t^6",
        "q^0: 1",
        "q^1: 1",
        "q^2: 1 + t^2",
        "q^3: 1 + t^2 + t^4",
    ]


def test_series_group_b_is_z2_companion(capsys):
    code, out, _ = run(capsys, "series", "--preset", "weyl", "--group", "B",
                       "--max-q", "4")
    assert code == 0
    code2, out2, _ = run(capsys, "series", "--preset", "z2_weyl", "--max-q", "4")
    assert code2 == 0
    assert out == out2


def test_series_group_b_needs_companion(capsys):
    code, _, err = run(capsys, "series", "--preset", "z2_weyl", "--group", "B")
    assert code == 2
    assert "error:" in err


def test_series_json_roundtrip(capsys):
    code, out, _ = run(capsys, "series", "--preset", "trig", "--max-q", "3",
                       "--format", "json")
    assert code == 0
    preset = load_preset("trig")
    assert parse(out.encode()) == generating_series_product(preset.betti, preset.d, 3)


def test_betti_table(capsys):
    code, out, _ = run(capsys, "betti", "--preset", "trig", "-n", "2")
    assert code == 0
    assert out.strip() == "1 + t + t^2 + t^3"


def test_hilb_polynomial(capsys):
    code, out, _ = run(capsys, "hilb", "--betti", "1,0,0", "-n", "3")
    assert code == 0
    assert out.strip() == "1 + t^2 + t^4"
    code, _, err = run(capsys, "hilb", "--betti", "1,zero", "-n", "2")
    assert code == 2
    assert "comma-separated" in err


def test_deform_count(capsys):
    code, out, _ = run(capsys, "deform", "--preset", "qweyl", "-n", "2")
    assert code == 0
    assert out.strip() == "3"


def test_cherednik_reduce(capsys):
    code, out, _ = run(capsys, "cherednik", "reduce", "-n", "2", "p1 x1")
    assert code == 0
    assert out.strip() == "x1 p1 - 1 + k s12"
    code, _, err = run(capsys, "cherednik", "reduce", "-n", "2", "p3 x1")
    assert code == 2
    assert "out of range" in err


def test_unknown_preset(capsys):
    code, _, err = run(capsys, "betti", "--preset", "nope", "-n", "2")
    assert code == 2
    assert "error:" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2


def test_verify_cherednik_suite(capsys):
    code, out, _ = run(capsys, "verify", "cherednik")
    assert code == 0
    assert "PASS cherednik confluence n=2" in out
    assert "FAIL" not in out


def test_verify_reports_failure_exit(monkeypatch, capsys):
    monkeypatch.setitem(cli._SUITES, "cherednik",
                        lambda seed: [CheckReport("stub", False, ("[FAIL] stub",))])
    code, out, _ = run(capsys, "verify", "cherednik")
    assert code == 1
    assert "FAIL stub" in out
