import json
import subprocess
import sys

import pytest

from sigma_lab.cli import main, parse_report, parse_space_text, run
from sigma_lab.errors import ParseError, SpaceValidationError
from sigma_lab.setfam import canonicalize, witness_w


@pytest.fixture
def space_file(tmp_path):
    def write(doc, name="space.json"):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return write


def js(argv):
    code, text = run(["--format", "json", *argv])
    return code, json.loads(text)


def test_classify_sierpinski(space_file):
    path = space_file({"points": ["0", "1"], "opens": [[], ["0"], ["0", "1"]]})
    code, d = js(["classify", path])
    assert code == 0
    assert d["axioms"]["T0"] and not d["axioms"]["T1"] and d["axioms"]["T_w"]
    assert d["notes"] == []


def test_classify_indiscrete_witness(space_file):
    path = space_file({"points": ["a", "b"], "opens": []})
    code, d = js(["classify", path])
    assert code == 0 and not d["axioms"]["T0"]
    assert d["witnesses"]["T0"]["points"] == ["a", "b"]
    assert d["notes"] == ["inserted the empty set", "inserted the whole space"]


def test_classify_sets_table(space_file):
    path = space_file({"points": ["0", "1"], "opens": [["0"]]})
    code, d = js(["classify", path, "--sets"])
    assert len(d["sets"]) == 4
    assert d["sets"][1]["subset"] == ["0"] and d["sets"][1]["open"]


def test_classify_malformed(space_file):
    assert run(["classify", space_file("{not json")])[0] == 2
    assert run(["classify", space_file({"points": ["a"]})])[0] == 2
    assert run(["classify", space_file({"points": ["a"], "opens": [["z"]]})])[0] == 2
    assert run(["classify", "/nonexistent/file.json"])[0] == 2


def test_classify_invalid_space(space_file):
    code, text = run(["classify", space_file({"points": ["a", "b", "c"], "opens": [["a"], ["b"]]})])
    assert code == 2 and "union" in text


def test_parse_space_text():
    sp, notes = parse_space_text('{"points": ["x"], "opens": [[], ["x"]]}')
    assert sp.n == 1 and notes == []
    with pytest.raises(ParseError):
        parse_space_text("[]")
    with pytest.raises(SpaceValidationError):
        parse_space_text('{"points": ["x", "x"], "opens": []}')


def test_human_flag_order(space_file):
    path = space_file({"points": ["0", "1"], "opens": [["0"]]})
    code, text = run(["classify", path])
    rows = [line.split()[0] for line in text.splitlines() if line.startswith("  ")]
    assert rows[:5] == ["Tω", "T5ω/8", "T3ω/8", "Tω/4", "T0"]


@pytest.mark.parametrize("n,labeled,unlabeled", [(1, 1, 1), (3, 29, 9)])
def test_enumerate(n, labeled, unlabeled):
    code, d = js(["enumerate", "--points", str(n), "--up-to-iso"])
    assert (d["labeled"], d["unlabeled"]) == (labeled, unlabeled)
    assert len(d["spaces"]) == unlabeled


def test_enumerate_count_only():
    code, d = js(["enumerate", "--points", "4", "--count-only"])
    assert d == {"command": "enumerate", "points": 4, "labeled": 355}


def test_enumerate_too_large():
    assert run(["enumerate", "--points", "9"])[0] == 2


def test_verify():
    code, d = js(["verify", "--max-points", "3"])
    assert code == 0 and d["all_hold"]
    code, d = js(["verify", "--max-points", "2", "--law", "L-3.27"])
    assert [law["id"] for law in d["laws"]] == ["L-3.27"]
    assert run(["verify", "--max-points", "2", "--law", "L-nope"])[0] == 2
    assert run(["verify", "--max-points", "6"])[0] == 2


def test_verify_failure_exit_code():
    from sigma_lab.laws import REGISTRY, law

    @law("L-test-cli", "no set is open", "set")
    def _(t, a):
        return a not in t.open

    try:
        code, d = js(["verify", "--max-points", "1", "--law", "L-test-cli"])
        assert code == 1 and d["laws"][0]["witness"]["opens"] == [[], ["0"]]
    finally:
        del REGISTRY["L-test-cli"]


def test_search_w():
    code, d = js(["search", "--property", "T0 & !TW4", "--max-points", "3"])
    sp, _ = parse_space_text(json.dumps(d["space"]))
    assert canonicalize(sp) == canonicalize(witness_w())


def test_search_none_and_parse_error():
    code, d = js(["search", "--property", "T1 & !T0"])
    assert code == 0 and not d["found"] and d["space"] is None
    code, text = run(["search", "--property", "T1 &&"])
    assert code == 2
    code, text = run(["search", "--property", "T1 & !T0", "--max-points", "2"])
    assert text == "none up to 2 point(s) satisfies T1 & !T0"


def test_search_sierpinski_human():
    code, text = run(["search", "--property", "TW & !R0", "--max-points", "3"])
    assert text.splitlines()[1] == '{"points": ["0", "1"], "opens": [[], ["0"], ["0", "1"]]}'


def test_catalog():
    code, d = js(["catalog"])
    assert code == 0 and d["passed"] == d["total"] == 17
    code, d = js(["catalog", "--claim", "EX-5.10"])
    assert code == 0 and d["claims"][0]["holds"]
    assert run(["catalog", "--claim", "EX-9.99"])[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["catalog"],
        ["enumerate", "--points", "3"],
        ["verify", "--max-points", "2"],
        ["search", "--property", "T0 & !TW4", "--max-points", "3"],
    ],
)
def test_json_round_trip_and_stable(argv):
    code, text = run(["--format", "json", *argv])
    d = parse_report(text)
    assert json.dumps(d, indent=2, ensure_ascii=False) == text
    assert run(["--format", "json", *argv]) == (code, text)


def test_format_after_subcommand():
    assert run(["catalog", "--format", "json"]) == run(["--format", "json", "catalog"])


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        run(["enumerate"])
    assert e.value.code == 2


def test_main_prints(capsys):
    assert main(["catalog", "--claim", "EX-3.12"]) == 0
    assert "1/1 claims pass" in capsys.readouterr().out


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "sigma_lab.cli", "enumerate", "--points", "2", "--count-only"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "2 point(s): 4 labelled spaces"
