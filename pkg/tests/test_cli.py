import json
import subprocess
import sys

import pytest

from synchrokit.cli import EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT, EXIT_OK, InputError, main, parse_group
from synchrokit.core import Permutation
from synchrokit.notation import format_images, parse_permutation, parse_transformation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    data = json.loads(out)
    assert data["schema"] == 1
    return code, data


def test_parse_group_examples(tmp_path):
    g = parse_group("(1 2 3 4)", 4)
    assert g.generators[0].images == (1, 2, 3, 0)
    t = parse_group("[2,1,3]")
    assert t.degree == 3 and t.generators[0].images == (1, 0, 2)
    with pytest.raises(InputError):
        parse_group("(1 2)(2 3)")
    with pytest.raises(InputError):
        parse_group("(1 2 5)", 4)
    with pytest.raises(InputError):
        parse_group("(1 2", 4)
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"schema": 1, "degree": 5, "generators": ["(1 2 3)", "[2,1,3,4,5]"], "name": "S3+2"}))
    g = parse_group(str(path))
    assert g.degree == 5 and g.name == "S3+2" and len(g.generators) == 2
    with pytest.raises(InputError):
        parse_group(str(path), 6)
    assert parse_group("S4").degree == 4
    assert parse_group("(1 2);(1 2 3 4 5)").degree == 5


def test_notation_roundtrip():
    for text in ["[2,3,1,5,4]", "[1]", "[3,1,2]"]:
        assert format_images(parse_permutation(text)) == text
    g = Permutation((1, 2, 0, 4, 3))
    assert parse_permutation(g.cycle_string(), 5) == g
    assert parse_permutation(str(g)) == g
    with pytest.raises(ValueError):
        parse_transformation("[0,1]")
    with pytest.raises(ValueError):
        parse_transformation("1,2")


def test_primes(capsys):
    code, data = run_json(capsys, "primes", "--limit", "500")
    assert code == EXIT_OK
    assert [r["p"] for r in data["primes"]] == [131, 191, 239, 251, 311, 419, 431, 491]
    code, out, _ = run(capsys, "primes", "--limit", "200")
    assert code == EXIT_OK and "131" in out and "191" in out


def test_reset_word(capsys, tmp_path):
    code, out, _ = run(capsys, "reset-word", "--cerny", "4")
    assert code == EXIT_OK and out.splitlines()[0] == "baaabaaab"
    path = tmp_path / "perm.json"
    path.write_text(json.dumps({"n": 3, "letters": [{"label": "a", "images": [2, 3, 1]}]}))
    code, data = run_json(capsys, "reset-word", str(path))
    assert code == EXIT_FAIL and data["synchronizing"] is False
    code, _, err = run(capsys, "reset-word")
    assert code == EXIT_INPUT


def test_sync_auto(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"n": 4, "letters": [{"label": "r", "images": [2, 3, 4, 1]},
                                                    {"label": "m", "images": [1, 1, 3, 3]}]}))
    code, data = run_json(capsys, "sync-auto", str(path))
    assert code == EXIT_OK
    assert data["omega"] == data["chi"] == data["min_rank"] == 2
    assert data["graph"]["edges"] == [[0, 2], [1, 3]]
    code, data = run_json(capsys, "sync-auto", "--cerny", "5")
    assert code == EXIT_OK and len(data["reset_word"]) == 16


def test_group_report_and_kut(capsys):
    code, data = run_json(capsys, "group-report", "C4")
    assert code == EXIT_OK
    assert data["primitive"] is False and data["block_system"] == [[1, 3], [2, 4]]
    code, data = run_json(capsys, "kut", "C4", "--k", "2")
    row = data["results"][0]
    assert row["ut"] is False and row["missed_orbit"] == [1, 3] and row["partition"] == [[1, 3], [2, 4]]
    assert row["universal_sets"] == [[1, 2]]


def test_lambda(capsys):
    code, data = run_json(capsys, "lambda", "C4", "--shape", "2,2")
    assert data["orbits"] == 2 and data["homogeneous"] is False
    code, _, _ = run(capsys, "lambda", "C4", "--shape", "2,1")
    assert code == EXIT_INPUT


def test_semigroup(capsys):
    code, data = run_json(capsys, "semigroup", "S4", "--map", "[1,1,2,3]")
    assert code == EXIT_OK
    assert data["non_units"] == 232 and data["normalising"] and data["map_regular"]
    code, data = run_json(capsys, "semigroup", "--map", "[1,1,2]")
    assert data["non_units"] == 2 and data["map_regular"] is False
    code, _, _ = run(capsys, "semigroup", "S3", "--map", "[2,1,3]")
    assert code == EXIT_INPUT


def test_sync_group_and_rystsov(capsys):
    code, data = run_json(capsys, "sync-group", "C4")
    assert code == EXIT_OK and data["synchronizing"] is False and data["omega"] == data["chi"] == 2
    code, data = run_json(capsys, "sync-group", "D5")
    assert data["synchronizing"] is True
    code, data = run_json(capsys, "rystsov", "C5")
    assert code == EXIT_OK and data["agrees"]


def test_check_theorem(capsys):
    code, data = run_json(capsys, "check-theorem", "levi-mcfadden", "--degree", "4")
    assert code == EXIT_OK and data["results"][0]["checked"] == 232
    code, _, _ = run(capsys, "check-theorem", "gr-properties", "--samples", "100", "--degree", "6", "--seed", "7")
    assert code == EXIT_OK
    code, data = run_json(capsys, "check-theorem", "rystsov", "--degree", "5")
    assert code == EXIT_OK and data["results"][0]["passed"]


def test_check_theorem_reproducible(capsys):
    _, a = run_json(capsys, "check-theorem", "gr-properties", "--samples", "30", "--seed", "3")
    _, b = run_json(capsys, "check-theorem", "gr-properties", "--samples", "30", "--seed", "3")
    assert a == b


def test_conjecture_scan(capsys):
    code, data = run_json(capsys, "conjecture-scan", "--degree", "5")
    assert code == EXIT_OK and data["counterexamples"] == []
    assert {r["group"] for r in data["reports"]} >= {"C5", "D5", "A5", "S5", "AGL(1,5)"}


def test_limits_exit_two(capsys):
    code, _, err = run(capsys, "rystsov", "C11")
    assert code == EXIT_LIMIT and "cap" in err
    code, _, _ = run(capsys, "conjecture-scan", "--degree", "10")
    assert code == EXIT_LIMIT


def test_bad_input_exit_three(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == EXIT_INPUT
    code, _, _ = run(capsys, "group-report", "(1 2)(2 3)")
    assert code == EXIT_INPUT


def test_json_mirrors_text(capsys):
    _, text, _ = run(capsys, "check-theorem", "higman", "--degree", "6")
    _, data = run_json(capsys, "check-theorem", "higman", "--degree", "6")
    assert text.startswith("PASS") == data["results"][0]["passed"]


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "synchrokit.cli", "reset-word", "--cerny", "3"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.splitlines()[1] == "length 4"
