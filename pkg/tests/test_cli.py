import json

import pytest

from copatt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize("argv,want", [
    (["count", "--pattern", "11", "--n", "4"], "6"),
    (["count", "--pattern", "12", "--n", "4", "--oracle"], "3 / 3 (agree)"),
    (["count", "--pattern", "11", "--n", "1"], "0"),
    (["count", "--pattern", "11", "--n", "4", "--l", "1", "--s", "2"], "1"),
    (["kparts", "--n", "3", "--k", "1"], "5"),
    (["kparts", "--n", "12", "--k", "6", "--l", "3", "--s", "4"], "4"),
    (["kparts", "--n", "5", "--k", "5"], "1"),
    (["kparts", "--n", "9", "--k", "2", "--oracle"], "320 / 320 (agree)"),
    (["palkparts", "--N", "4", "--k", "1"], "6"),
    (["palkparts", "--N", "12", "--k", "5", "--oracle"], "6 / 6 (agree)"),
    (["bijection", "kpart", "encode", "3+1+[6]+2"], "4 5 3 0 1 2 6"),
    (["bijection", "kpart", "decode", "4 5 3 0 1 2 6", "--k", "6", "--check"], "3+1+[6]+2"),
    (["bijection", "kpart", "decode", "4 5 3 0 1 2 6", "--n", "12"], "3+1+[6]+2"),
    (["bijection", "pal2", "encode", "2+[1]+2+1+4+1+2+1+2"], "4 7 6 3 1 2 5 8 9"),
    (["bijection", "pal2", "decode", "1 3 2", "--k", "5", "--check"], "[5]+1+1+5"),
    (["bijection", "pal1", "encode", "1+[1]+1+1", "--check"], "2 3 1"),
    (["bijection", "s1", "backward", "010"], "4 5 1 3 2"),
    (["bijection", "s2", "forward", "8 9 6 7 5 3 4 1 2"], "110001100"),
    (["bijection", "s3", "forward", "2 3 1", "--check"], "1 3 4 2"),
    (["bijection", "s4", "forward", "((2,3),(1,4))", "--n", "5", "--check"], "4 1 2 3 5"),
    (["bijection", "s4", "backward", "4 2 1 3"], "((1,3),(2,4))"),
    (["enumerate", "S1", "--n", "3", "--count"], "8"),
    (["enumerate", "S4", "--n", "5", "--count"], "15"),
    (["enumerate", "palindromes", "--N", "4"], "1+1+1+1\n1+2+1\n2+2\n4"),
    (["gf", "--pattern", "12", "--caps", "3", "1", "1"], "3 0 0 1"),
])
def test_commands(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == want


def test_json_matches_text(capsys):
    for argv in (["count", "--pattern", "112", "--n", "9"],
                 ["kparts", "--n", "14", "--k", "3"],
                 ["bijection", "s2", "forward", "8 9 6 7 5 3 4 1 2"]):
        _, text, _ = run(capsys, *argv)
        _, raw, _ = run(capsys, *argv, "--json")
        doc = json.loads(raw)
        assert doc["value"] == text
        assert isinstance(doc["value"], str)
        assert {"query", "value", "method"} <= doc.keys()


def test_big_values_are_decimal_strings(capsys):
    _, raw, _ = run(capsys, "kparts", "--n", "200", "--k", "1", "--json")
    doc = json.loads(raw)
    assert doc["method"] == "closed-form"
    assert int(doc["value"]) == (202 << 199) >> 2


def test_spop_file(tmp_path, capsys):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"elements": ["1", "1'", "2'"], "less": [["1'", "2'"]],
                                "word": ["1", "1'", "2'"]}))
    code, out, _ = run(capsys, "count", "--spop", str(path), "--n", "8", "--oracle")
    assert code == 0
    assert out == "27 / 27 (agree)"


def test_dump_series(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "11", "--n", "2", "--dump-series")
    assert code == 0
    assert out.splitlines() == ["2 0 0 1", "1"]


def test_kparts_table(capsys):
    code, out, _ = run(capsys, "kparts", "--n", "5", "--k", "2", "--table")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].split() == ["sum", "4", "2", "2", "4", "12"]


@pytest.mark.parametrize("argv,code", [
    (["count", "--pattern", "13", "--n", "3"], 2),
    (["count", "--n", "3"], 2),
    (["kparts", "--n", "3", "--k", "4"], 2),
    (["palkparts", "--N", "4", "--k", "2"], 2),
    (["bijection", "kpart", "encode", "3+1+6+2"], 2),
    (["bijection", "s1", "forward", "1 2 3"], 4),
    (["bijection", "s2", "backward", "0100"], 4),
    (["bijection", "kpart", "decode", "1 0 2", "--k", "1"], 4),
    (["bijection", "pal2", "encode", "1+[2]+1"], 4),
    (["count", "--pattern", "11", "--n", "30", "--oracle"], 3),
    (["enumerate", "compositions", "--n", "40"], 3),
    (["verify", "--suite", "pal1", "--max-n", "25"], 3),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error:")


def test_cap_refusal_states_the_policy(capsys):
    _, _, err = run(capsys, "enumerate", "compositions", "--n", "40")
    assert "COPATT_MAX_N" in err


def test_cap_override(monkeypatch, capsys):
    monkeypatch.setenv("COPATT_MAX_N", "4")
    code, _, _ = run(capsys, "enumerate", "compositions", "--n", "5")
    assert code == 3
    code, out, _ = run(capsys, "enumerate", "compositions", "--n", "4", "--count")
    assert (code, out) == (0, "8")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kparts", "--max-n", "10")
    assert code == 0
    assert out.splitlines() == ["pass  kparts  [n <= 10]", "all checks passed"]


def test_verify_report_is_sorted_and_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "all", "--max-n", "5")
    _, second, _ = run(capsys, "verify", "--suite", "all", "--max-n", "5", "--jobs", "2")
    assert first == second
    names = [line.split()[1] for line in first.splitlines()[:-1]]
    assert names == sorted(names)


def test_verify_json(capsys):
    code, raw, _ = run(capsys, "verify", "--suite", "gallery", "--max-n", "5", "--json")
    doc = json.loads(raw)
    assert code == 0 and doc["passed"]
    assert [c["check"] for c in doc["checks"]] == ["s1", "s2", "s3", "s4"]
