#!/usr/bin/env python3
"""
Expression parser, printer, command language, sessions and the batch CLI
"""

import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), 'app'))

import json

import pytest
from hypothesis import given, settings, strategies as st

import main as cli
from algebra.fields import Field
from algebra.grassmann import Ambient, SuperPolynomial, Term
from errors import CommandError, ParseError, UnknownName
from frontend.commands import parse_line, parse_variables
from frontend.expr_parser import parse_expr, parse_generator_list
from frontend.printer import format_error, format_superpolynomial
from session.session_manager import Session, SessionState, render_text

QQ_FIELD = Field(0)
SMALL = Ambient(QQ_FIELD, ("x",), ("t1", "t2"))
AMBIENT = Ambient(QQ_FIELD, ("x", "y", "z"), ("t1", "t2", "t3", "t4"))
DEMO = os.path.join(os.path.dirname(__file__), "demo", "demo_session.sra")

exponents = st.tuples(*(st.integers(0, 5) for _ in range(3))).filter(lambda e: sum(e) <= 5)
coefficients = st.fractions(min_value=-7, max_value=7, max_denominator=6)
terms = st.builds(Term, coefficients, exponents, st.integers(0, 15))
superpolys = st.lists(terms, max_size=6).map(lambda ts: SuperPolynomial.from_terms(AMBIENT, ts))


def parse(text, ambient=SMALL):
    return parse_expr(text, ambient)


def test_parse_examples():
    assert parse("x*t1 - 2*t1*x") == -parse("x*t1")
    assert parse("t2*t1") == -parse("t1*t2")
    assert parse("(x + t1*t2)^2") == parse("x^2 + 2*x*t1*t2")
    assert parse("2x t1") == parse("2*x*t1")
    assert parse("x/2 + 1/2*x") == parse("x")
    assert parse("-x^2") == -(parse("x") ** 2)
    assert parse("0").is_zero


@pytest.mark.parametrize("text, message", [
    ("x +", "unexpected 'end of input'"),
    ("x + w", "unknown variable 'w'"),
    ("x^y", "exponent must be a natural number"),
    ("x/t1", "division is only by nonzero constants"),
    ("x/0", "division by zero"),
    ("x $ 1", "unexpected character '$'"),
    ("(x + 1", "expected ')'"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.message == message


def test_generator_lists():
    assert parse_generator_list("(x, t1, 0)", SMALL) == [parse("x"), parse("t1")]
    assert parse_generator_list("()", SMALL) == []
    with pytest.raises(ParseError) as info:
        parse_generator_list("(x, y)", SMALL)
    assert info.value.position == (4, 5)


def test_printer_examples():
    assert format_superpolynomial(parse("1/2 - x*t1")) == "-x*t1 + 1/2"
    assert format_superpolynomial(parse("t2*t1 + x^2")) == "x^2 - t1*t2"
    assert format_superpolynomial(SuperPolynomial.zero(SMALL)) == "0"


@settings(max_examples=1000, deadline=None)
@given(superpolys)
def test_print_parse_round_trip(f):
    assert parse_expr(format_superpolynomial(f), AMBIENT) == f


def test_command_language():
    commands = parse_line("ring R = Q[x | t] ; ideal m = (x, t) ; is_invertible m  # comment")
    assert [c.verb for c in commands] == ["ring", "ideal", "is_invertible"]
    assert commands[1].text == "ideal m = (x, t)"
    member, = parse_line("member x*t in (x, t)")
    assert [a.text for a in member.args] == ["x*t", "(x, t)"]
    assert parse_variables("x, y | t1, t2") == (("x", "y"), ("t1", "t2"))
    assert parse_line("   # only a comment") == []
    with pytest.raises(CommandError):
        parse_variables("x | x")
    with pytest.raises(CommandError):
        parse_line("frobnicate R")
    with pytest.raises(CommandError):
        parse_line("ideal m = power m")


def test_session_examples():
    session = Session()
    results = session.execute("ring R = Q[x | t] ; ideal m = (x, t) ; is_invertible m")
    assert results[0]["value"] == "R = Q[x | t]"
    invertible = results[2]
    assert invertible["verb"] == "is_invertible"
    assert invertible["verdict"] == "false"
    assert "proper" in invertible["reason"]
    assert set(invertible) <= {"verb", "verdict", "witness", "reason", "timing_ms"}
    assert session.execute("is_dedekind")[0]["verdict"] == "true"

    session.execute("ring S = Q[X | t1, t2] / (X*t1*t2)")
    ksdim, = session.execute("ksdim")
    assert ksdim["value"] == "1|1" and ksdim["witness"] == "t1"
    strong, = session.execute("is_strong")
    assert strong["verdict"] == "false" and strong["witness"] == "X"
    assert session.execute("is_zerodivisor X")[0]["witness"] in ("t1*t2", "-t1*t2")
    assert session.execute("superreduce")[0]["value"] == "Q[X] / (0)"


def test_session_bindings():
    session = Session()
    session.execute("ring R = Q[x | t]")
    session.execute("elem u = x + 1 ; ideal b = (u*t)")
    assert session.execute("member (x + 1)*t in b")[0]["verdict"] == "true"
    assert session.execute("nf u^2 mod (x)")[0]["value"] == "1"
    with pytest.raises(CommandError):
        session.execute("elem x = 1")
    with pytest.raises(UnknownName):
        session.execute("is_prime nothing")
    session.execute("ring R = Q[y]")
    assert "b" not in session.ideals
    assert session.execute("quit")[0]["value"] == "bye"
    assert session.state is SessionState.FINISHED


def test_save_and_load(tmp_path):
    path = tmp_path / "session.sra"
    session = Session()
    session.execute("ring R = Q[x | t] ; ideal m = (x, t) ; ksdim")
    session.execute(f"save {path}")
    assert path.read_text(encoding="utf-8").splitlines() == ["ring R = Q[x | t]", "ideal m = (x, t)"]
    fresh = Session()
    loaded, = fresh.execute(f"load {path}")
    assert loaded["commands"] == 2
    assert fresh.execute("is_maximal m")[0]["verdict"] == "true"


def test_parse_error_location():
    session = Session()
    session.execute("ring R = Q[x | t]")
    text = "elem u = x + w"
    with pytest.raises(ParseError) as info:
        session.execute(text, 2)
    error = info.value
    assert error.position[0] == text.index("w")
    assert error.to_dict()["column"] == text.index("w") + 1 and error.to_dict()["line"] == 2
    rendered = format_error(error).splitlines()
    assert rendered[0].startswith("error [parse_error] at line 2, column 14")
    assert rendered[2] == "  " + " " * text.index("w") + "^"


def test_render_text():
    assert render_text({"verb": "is_prime", "verdict": "false", "witness": "t", "reason": "r"}) \
        == "false (r)\n  witness: t"
    assert render_text({"verb": "show", "value": ["a", "b"]}) == "a\nb"


def _demo_json(capsys):
    assert cli.main(["run", DEMO, "--json"]) == 0
    results = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    for result in results:
        assert "verb" in result and ("verdict" in result or "value" in result)
        assert isinstance(result.pop("timing_ms"), float)
    return results


def test_demo_batch_is_deterministic(capsys):
    first = _demo_json(capsys)
    second = _demo_json(capsys)
    assert first == second
    dedekind = [r["verdict"] for r in first if r["verb"] == "is_dedekind"]
    assert dedekind == ["true", "false", "false"]
    ksdim = [r["value"] for r in first if r["verb"] == "ksdim"]
    assert ksdim == ["1|1", "1|1"]


def test_batch_stops_at_first_error(capsys):
    code = cli.run_batch(Session(), ["ring R = Q[x | t]", "is_prime (x", "ksdim"], True)
    assert code == 1
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    error = json.loads(lines[1])
    assert error["type"] == "error" and error["line"] == 2


def main():
    """Run the example checks"""
    print("Front end")
    print("=" * 50)
    checks = [test_parse_examples, test_generator_lists, test_printer_examples, test_command_language,
              test_session_examples, test_session_bindings, test_parse_error_location, test_render_text]
    ok = True
    for check in checks:
        try:
            check()
            print(f"  PASS {check.__name__}")
        except AssertionError as exc:
            ok = False
            print(f"  FAIL {check.__name__}: {exc}")
    return ok


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
