import io
import json

import pytest

from sl2cf.cli import run
from sl2cf.matrix import Mat2, Params
from sl2cf.membership import check_group

M43 = "10105 2457 -3648 -887"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_cf(capsys):
    assert call(capsys, "cf", "--", "-2457/887") == (0, "[-3,4,2,1,6,1,8]", "")


def test_transforms_and_eval(capsys):
    assert call(capsys, "f", "[-3,4,2,1,6,1,8]")[:2] == (0, "[-3,4,3,-8,9]")
    assert call(capsys, "g", "[-3,4,3,-8,9]")[:2] == (0, "[-3,4,2,1,6,1,8]")
    assert call(capsys, "eval", "[-3,4,3,-8,9]")[:2] == (0, "-2457/887")
    code, out, _ = call(capsys, "eval", "--json", "[5]")
    assert code == 0 and json.loads(out) == {"result": "5"}


def test_check_member(capsys):
    code, out, _ = call(capsys, "check", "--group", "-u", "4", "-v", "3", "-M", M43)
    assert code == 0 and out == "member R^-1 L R L^-2 R^3 L"


def test_check_non_member_json(capsys):
    code, out, _ = call(capsys, "check", "--group", "-u", "4", "-v", "4",
                        "-M", "17 12 24 17", "--json")
    assert code == 1
    assert json.loads(out) == {"member": False, "word": None, "diagnostic": "divisibility"}


def test_text_and_json_agree(capsys):
    for m in (M43, "17 12 24 17", "1 0 0 1", "2 1 1 1"):
        _, text, _ = call(capsys, "check", "--group", "-u", "4", "-v", "3", "-M", m)
        _, js, _ = call(capsys, "check", "--group", "-u", "4", "-v", "3", "-M", m, "--json")
        lib = check_group(Mat2.parse(m), Params(4, 3))
        assert json.loads(js) == lib.to_json()
        assert text == str(lib)


def test_mode_inference(capsys):
    assert call(capsys, "check", "-u", "2", "-v", "2", "-M", "5 4 6 5")[:2] == (
        0, "member L R^-1 L R^-1 L")
    assert call(capsys, "check", "-u", "4", "-v", "3", "-M", M43)[0] == 2


@pytest.mark.parametrize("argv, code", [
    (["check", "--group", "-u", "2", "-v", "3", "-M", "1 0 0 1"], 3),
    (["check", "--monoid", "-u", "1", "-v", "3", "-M", "1 0 0 1"], 3),
    (["check", "--group", "-u", "0", "-v", "3", "-M", "1 0 0 1"], 2),
    (["check", "--group", "-u", "3", "-v", "3", "-M", "1 2 3"], 2),
    (["cf", "1/0"], 2),
    (["f", "[1,-3,-2]"], 2),
    (["eval", "[2,1,-1]"], 2),
    (["nonsense"], 2),
    (["check", "--group", "--monoid", "-u", "3", "-v", "3", "-M", "1 0 0 1"], 2),
])
def test_error_exit_codes(capsys, argv, code):
    got, out, err = call(capsys, *argv)
    assert got == code
    assert err and len(err.splitlines()) == 1


def test_batch(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("5 4 6 5\n\n1 1 0 1\n"))
    code, out, _ = call(capsys, "check", "-u", "2", "-v", "2", "--batch")
    assert code == 1
    assert out.splitlines() == ["member L R^-1 L R^-1 L", "non-member (ambient-set)"]
    monkeypatch.setattr("sys.stdin", io.StringIO("1 0 0 1\nbad\n"))
    code, out, _ = call(capsys, "check", "-u", "2", "-v", "2", "--batch", "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 2 and lines[0]["member"] and "error" in lines[1]


def test_factor(capsys):
    assert call(capsys, "factor", "--group", "-u", "4", "-v", "3", "-M", M43)[:2] == (
        0, "R^-1 L R L^-2 R^3 L")
    code, out, err = call(capsys, "factor", "--group", "-u", "4", "-v", "4", "-M", "17 12 24 17")
    assert code == 1 and out == "" and "divisibility" in err


def test_complete(capsys):
    assert call(capsys, "complete", "-u", "4", "-v", "4", "-b", "12", "-d", "17")[:2] == (
        0, "17 12 24 17")
    code, out, _ = call(capsys, "complete", "-u", "2", "-v", "2", "-b", "4", "-d", "5",
                        "--monoid-ambient", "--json")
    assert code == 0 and json.loads(out) == {"a": "5", "b": "4", "c": "6", "d": "5"}
    assert call(capsys, "complete", "-u", "2", "-v", "2", "-b=-4", "-d", "5",
                "--monoid-ambient")[0] == 1


def test_oracle_and_density(capsys):
    code, out, _ = call(capsys, "oracle", "--group", "-u", "4", "-v", "3", "-M", M43,
                        "--blocks", "6", "--max-exp", "3")
    assert (code, out) == (0, "R^-1 L R L^-2 R^3 L")
    code, out, _ = call(capsys, "oracle", "-u", "4", "-v", "4", "-M", "17 12 24 17",
                        "--blocks", "4", "--max-exp", "4")
    assert (code, out) == (1, "none")
    assert call(capsys, "oracle", "-u", "3", "-v", "3", "-M", "1 0 0 1",
                "--blocks", "12", "--max-exp", "5", "--cap", "100")[0] == 2
    code, out, _ = call(capsys, "density", "-k", "2", "--bound", "20", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["members"] == rep["ambient"] and rep["k"] == 2


def test_big_integers(capsys):
    big = 10 ** 60
    code, out, _ = call(capsys, "cf", f"{big + 1}/{big}")
    assert code == 0 and out == f"[1,{big}]"
