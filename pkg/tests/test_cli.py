"""CLI surface: exit codes, JSON schema, determinism."""

import json

import pytest

from weakid import __version__
from weakid.cli import main

REPORT_KEYS = {"degree", "dim_P", "dim_kernel", "dim_consequences",
               "containment", "equal", "decomposition", "timings_ms",
               "toolkit_version"}


def test_verify_degree4_exit_zero(capsys):
    assert main(["verify", "--degree", "4"]) == 0
    out = capsys.readouterr().out
    assert "equal             True" in out


def test_verify_json_schema(capsys):
    assert main(["verify", "--degree", "4", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == REPORT_KEYS
    assert payload["degree"] == 4
    assert payload["equal"] is True
    assert payload["toolkit_version"] == __version__


def test_verify_json_deterministic_without_timings(capsys):
    assert main(["verify", "--degree", "4", "--json", "--no-timings"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--degree", "4", "--json", "--no-timings"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["timings_ms"] == {}


def test_check_identity_true(capsys):
    assert main(["check", "--expr", "[[x1,x2],[x3,x4]]", "--mode", "identity"]) == 0
    assert "weak identity: True" in capsys.readouterr().out


def test_check_identity_false_prints_witness(capsys):
    assert main(["check", "--expr", "[x1,x2]", "--mode", "identity"]) == 1
    out = capsys.readouterr().out
    assert "weak identity: False" in out
    assert "witness substitution" in out
    assert "x1 = [[" in out
    assert "value = [[" in out


def test_check_consequence(capsys):
    assert main(["check", "--expr", "S4(x1,x2,x3,x4)", "--mode", "consequence"]) == 0
    assert main(["check", "--expr", "[x1,x2]", "--mode", "consequence"]) == 1


def test_check_two_variable_relations_via_surface_syntax(capsys):
    # [x2,x1,x1] o [x2,x1] written with the ad shorthand
    assert main(["check", "--expr", "o(ad(x, y, 2), [y,x])"]) == 0
    # [[y,x,y],[y,x,x]] + 4[y,x]^3
    assert main(["check", "--expr",
                 "[[y,x,y],[y,x,x]] + 4*[y,x]^3"]) == 0
    # and the same relations are consequences of the generators
    assert main(["check", "--expr", "o(ad(x, y, 2), [y,x])",
                 "--mode", "consequence"]) == 0


def test_check_parse_error_exit_two(capsys):
    assert main(["check", "--expr", "[x1", "--mode", "identity"]) == 2
    assert "error" in capsys.readouterr().err


def test_check_consequence_rejects_inhomogeneous(capsys):
    assert main(["check", "--expr", "x1 + x1*x2", "--mode", "consequence"]) == 2
    assert "multihomogeneous" in capsys.readouterr().err


def test_verify_proper_mode(capsys):
    assert main(["verify", "--degree", "4", "--proper", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim_P"] == 9
    assert payload["dim_kernel"] == payload["dim_consequences"] == 4
    assert payload["equal"] is True


def test_check_json_witness(capsys):
    assert main(["check", "--expr", "S3(x1,x2,x3)", "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"] is False
    assert payload["witness"]["value"] == [["0", "1"], ["-1", "0"]]


def test_decompose_gamma(capsys):
    assert main(["decompose", "--space", "gamma", "--degree", "4", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["decomposition"] == [
        [[3, 1], 1], [[2, 2], 1], [[2, 1, 1], 1], [[1, 1, 1, 1], 1]]


def test_decompose_quotient_and_kernel(capsys):
    assert main(["decompose", "--space", "gamma-quotient", "--degree", "4",
                 "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["decomposition"] == [[[3, 1], 1], [[2, 2], 1]]
    assert main(["decompose", "--space", "gamma-kernel", "--degree", "4",
                 "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["decomposition"] == [[[2, 1, 1], 1], [[1, 1, 1, 1], 1]]


def test_hilbert(capsys):
    assert main(["hilbert", "--max", "6", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["equal"] is True
    assert payload["computed"] == ["1", "0", "1", "2", "4", "6", "9"]


def test_hilbert_respects_degree_cap(capsys, monkeypatch):
    monkeypatch.setenv("WEAKID_DEGREE_CAP", "5")
    assert main(["hilbert", "--max", "6"]) == 2
    assert "cap" in capsys.readouterr().err


def test_report_writes_schema_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["report", "--degrees", "4", "--out", str(out),
                 "--no-timings"]) == 0
    payload = json.loads(out.read_text())
    assert payload["toolkit_version"] == __version__
    (record,) = payload["reports"]
    assert set(record) == REPORT_KEYS
    assert record["equal"] is True
    assert record["decomposition"] == [[[3, 1], 1], [[2, 2], 1]]


def test_report_byte_identical_reruns(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["report", "--degrees", "4", "--out", str(a), "--no-timings"]) == 0
    assert main(["report", "--degrees", "4", "--out", str(b), "--no-timings"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bad_degree_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["verify", "--degree", "9"])
    assert e.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert __version__ in capsys.readouterr().out
