import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from chw.automorphisms import FR, Delta, Eps, Perm
from chw.cli import dispatch
from chw.group import GroupElement, format_element, multiply, power
from chw.parsing import ParseError, parse_autoword, parse_element, parse_word

from conftest import elements

x = GroupElement.gen


def test_parse_examples():
    assert parse_element("x1^-1 x2^2 x1 x2^2", 2).is_identity()
    assert parse_element("x1^3", 2) == GroupElement.of(2, [1], [1, 0])
    assert parse_element("(x1 x2)^2", 3) == GroupElement.of(3, [1, 2, 1, 2], [0, 0, 0])
    assert parse_element("(x1 x2)^-1", 2) == power(multiply(x(2, 1), x(2, 2)), -1)
    assert parse_element("; [1,-2]", 2) == GroupElement.of(2, [], [1, -2])
    assert parse_element("x2 ; [0, 3]", 2) == GroupElement.of(2, [2], [0, 3])
    assert parse_element("x1^0", 2).is_identity()


def test_format_examples():
    assert format_element(GroupElement.of(3, [1, 2], [0, 1, 0])) == "x1 x2 ; [0,1,0]"
    assert format_element(GroupElement.identity(2)) == "; [0,0]"


@settings(max_examples=150)
@given(st.integers(1, 5).flatmap(elements))
def test_round_trip(g):
    assert parse_element(format_element(g), g.rank) == g


MALFORMED = [
    "",
    "   ",
    "x",
    "x0",
    "x4",
    "y1",
    "x1^",
    "x1^-",
    "x1^a",
    "(x1",
    "x1)",
    "()",
    "x1 ;",
    "x1 ; [",
    "x1 ; [1,2]",
    "x1 ; [1,2,3,4]",
    "x1 ; [1,,2,3]",
    "x1 ; [1,2,3] x2",
    "x1 x2 ;; [0,0,0]",
    "x1^2^3",
    "x1 % x2",
]


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_words_rejected(text):
    with pytest.raises(ParseError):
        parse_element(text, 3)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_word("x1 x9", 3)
    assert info.value.pos == 3


@settings(max_examples=300)
@given(st.text(alphabet="x123()^-;[], y", max_size=20))
def test_fuzz_parser_only_raises_parse_errors(text):
    try:
        g = parse_element(text, 3)
    except ParseError:
        return
    assert g.rank == 3


def test_parse_autoword_examples():
    w = parse_autoword("a[1,2] d[3]", 3)
    assert w.tokens == (FR(1, 2), Delta(3))
    assert parse_autoword("e[1,2]^-2", 3).tokens == (Eps(1, 2, -2),)
    assert parse_autoword("p[2,3,1]' a[2,1]'", 3).tokens == (Perm((2, 3, 1), True), FR(2, 1, True))
    assert parse_autoword("", 3).tokens == ()


@pytest.mark.parametrize(
    "text",
    ["a[1,1]", "a[1,4]", "a[1]", "d[1,2]", "p[1,1,2]", "p[1,2]", "q[1]", "a[1,2]^2", "a[1,2]d[3]", "e[1,2]^", "a[1,2"],
)
def test_parse_autoword_errors(text):
    with pytest.raises(ParseError):
        parse_autoword(text, 3)


def run(argv, capsys):
    code = dispatch(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_nf(capsys):
    assert run(["nf", "--n", "2", "x1^-1 x2^2 x1 x2^2"], capsys) == (0, "; [0,0]\n", "")
    assert run(["nf", "--n", "3", "(x1 x2)^2"], capsys)[1] == "x1 x2 x1 x2 ; [0,0,0]\n"


def test_cli_apply_and_induced(capsys):
    code, out, _ = run(["apply", "--n", "2", "--auto", "a[1,2]", "x1"], capsys)
    assert code == 0 and out == "x2 x1 x2 ; [0,-1]\n"
    code, out, _ = run(["induced", "--n", "3", "--auto", "e[1,2]^3", "--json"], capsys)
    data = json.loads(out)
    assert data["w_images"] == [[1], [2], [3]]
    assert data["a_matrix"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert data["translation"] == [[0, 3, 0], [0, 0, 0], [0, 0, 0]]
    code, out, _ = run(["induced", "--n", "3", "--auto", "a[1,2]"], capsys)
    assert code == 0 and "W images" in out


def test_cli_cohomology(capsys):
    assert run(["h1", "--n", "4"], capsys)[1] == "Z^8 x (Z/2)^4\n"
    assert run(["h2", "--n", "3"], capsys)[1] == "(Z/2)^3\n"
    data = json.loads(run(["h1", "--n", "5", "--json"], capsys)[1])
    assert data == {"n": 5, "free_rank": 15, "torsion": [2] * 5}


def test_cli_ball(capsys):
    assert run(["ball", "--n", "2", "--len", "2", "--box", "1"], capsys)[1] == "45\n"


def test_cli_snf(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2 4\n6 8\n")
    code, out, _ = run(["snf", "--file", str(f)], capsys)
    assert code == 0
    assert "invariant factors: 2 4" in out and "(Z/2)^1 x (Z/4)^1" in out
    data = json.loads(run(["snf", "--file", str(f), "--json"], capsys)[1])
    assert data["invariant_factors"] == [2, 4]
    f.write_text("1 2\n3\n")
    assert run(["snf", "--file", str(f)], capsys)[0] == 2
    assert run(["snf", "--file", str(tmp_path / "missing.txt")], capsys)[0] == 2


def test_cli_errors(capsys):
    code, _, err = run(["nf", "--n", "2", "x3"], capsys)
    assert code == 2 and "error" in err
    assert run(["apply", "--n", "3", "--auto", "a[1,1]", "x1"], capsys)[0] == 2
    assert run(["verify", "--n", "2"], capsys)[0] == 2
    assert run(["bogus"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_cli_verify(capsys):
    code, out, _ = run(["verify", "--n", "3", "--suite", "autw"], capsys)
    assert code == 0 and out.startswith("[PASS] suite=autw n=3 seed=0")
    assert run(["verify", "--n", "2", "--suite", "monoid"], capsys)[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chw", "nf", "--n", "2", "x1^3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "x1 ; [1,0]\n"
