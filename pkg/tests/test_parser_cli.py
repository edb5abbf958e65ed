"""Parser grammar pins and command-line behavior, exit codes included."""

from __future__ import annotations

import json
from fractions import Fraction as Q

import pytest

from uniqpoly import cli
from uniqpoly.parser import (
    DegreeCapError,
    ParseError,
    format_poly,
    format_rational,
    parse_poly,
)
from uniqpoly.polynomials import Poly, X


# parser

def test_basic_forms():
    assert parse_poly("X^4+X+1") == X**4 + X + 1
    assert parse_poly(" X ^ 2 - 3 ") == X**2 - 3
    assert parse_poly("0") == Poly.zero()
    assert parse_poly("-7") == Poly.of(Q(-7))


def test_rational_literals():
    assert parse_poly("3/4X^2 + 1/2") == Q(3, 4) * X**2 + Poly.of(Q(1, 2))
    # the slash only makes a literal straight after an integer
    assert parse_poly("1/2X") == Q(1, 2) * X


def test_juxtaposition_multiplies():
    assert parse_poly("2X(X+1)") == 2 * X * (X + 1)
    assert parse_poly("(X-1)(X+1)") == X**2 - 1
    assert parse_poly("2*X*X") == 2 * X**2


def test_sign_stacking():
    assert parse_poly("--X") == X
    assert parse_poly("-X^2 - -3") == -(X**2) + 3
    # the exponent binds before the sign
    assert parse_poly("-X^2") == -(X**2)


def test_power_binds_to_atom():
    assert parse_poly("2X^3") == 2 * X**3
    assert parse_poly("(X+1)^2") == X**2 + 2 * X + 1


def test_error_offsets():
    with pytest.raises(ParseError) as info:
        parse_poly("X^^2")
    assert info.value.offset == 2
    assert "integer exponent" in str(info.value)

    with pytest.raises(ParseError) as info:
        parse_poly("X +")
    assert info.value.offset == 3

    with pytest.raises(ParseError) as info:
        parse_poly("X$")
    assert info.value.offset == 1

    with pytest.raises(ParseError) as info:
        parse_poly("(X+1")
    assert ")" in info.value.expected


def test_zero_denominator_rejected():
    with pytest.raises(ParseError) as info:
        parse_poly("1/0 + X")
    assert "zero denominator" in str(info.value)


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_poly("X+1)")


def test_degree_cap():
    with pytest.raises(DegreeCapError) as info:
        parse_poly("X^65", degree_cap=64)
    assert info.value.degree == 65 and info.value.cap == 64
    assert parse_poly("X^64", degree_cap=64).degree == 64


def test_format_round_trip_pins():
    pins = [
        X**4 + X + 1,
        -(X**2) - X,
        Q(3, 4) * X**2 - Q(1, 2),
        Poly.zero(),
        Poly.of(Q(5)),
        2 * X**7 - X**3,
    ]
    for p in pins:
        assert parse_poly(format_poly(p)) == p
    assert format_poly(X**4 + X + 1) == "X^4 + X + 1"
    assert format_poly(-(X**2) - X) == "-X^2 - X"
    assert format_poly(Poly.zero()) == "0"


def test_format_rational():
    assert format_rational(Q(3, 4)) == "3/4"
    assert format_rational(Q(-2)) == "-2"


# command line

def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "classify", "X^4+X+1")
    rep = json.loads(out)
    assert code == 0
    assert rep["schema"] == "uniqpoly-report/1"
    assert rep["verdict"]["sup_rational"] == "yes"
    assert rep["verdict"]["sup_meromorphic"] == "no"
    assert rep["audit"]["ok"] is True
    assert rep["timing"]["mode"] == "deterministic"


def test_classify_all_no_is_still_success(capsys):
    code, out, _ = run_cli(capsys, "classify", "X^2")
    rep = json.loads(out)
    assert code == 0
    assert set(rep["verdict"].values()) == {"no"}


def test_classify_parse_error_exit_two(capsys):
    code, out, _ = run_cli(capsys, "classify", "X^^2")
    rep = json.loads(out)
    assert code == 2
    assert rep["error"]["kind"] == "parse"
    assert "offset 2" in rep["error"]["message"]


def test_classify_out_of_scope_exit_three(capsys):
    code, out, _ = run_cli(capsys, "classify", "2X^5-5X^4+4X^3-X^2")
    rep = json.loads(out)
    assert code == 3
    assert rep["verdict"]["up_rational"] == "out_of_scope"
    assert rep["out_of_scope_reasons"]


def test_usage_errors_exit_one(capsys):
    assert run_cli(capsys, "classify")[0] == 1
    assert run_cli(capsys)[0] == 1
    assert run_cli(capsys, "nonsense")[0] == 1
    assert run_cli(capsys, "corollary", "0", "4", "9", "1", "1")[0] == 1


def test_audit_failure_exit_four(capsys, monkeypatch):
    # force the audit to disagree; the report must still be printed
    def broken_audit(p, verdict=None):
        return {"ok": False, "failures": ["forced"], "slots": {},
                "oracle": {"any_c": None, "c_equals_1": None}, "table": None}

    monkeypatch.setattr(cli, "consistency_audit", broken_audit)
    code, out, _ = run_cli(capsys, "classify", "X^4+X+1")
    rep = json.loads(out)
    assert code == 4
    assert rep["audit"]["ok"] is False


def test_reports_are_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "classify", "X^4+X+1", "--seed", "7")
    _, out2, _ = run_cli(capsys, "classify", "X^4+X+1", "--seed", "7")
    assert out1 == out2


def test_no_floats_anywhere(capsys):
    _, out, _ = run_cli(capsys, "classify", "1/2X^5 - 3/4X^2")

    def walk(node):
        if isinstance(node, float):
            raise AssertionError("float leaked into a report")
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        if isinstance(node, list):
            for v in node:
                walk(v)

    walk(json.loads(out))


def test_text_mode_renders_same_structure(capsys):
    code, out, _ = run_cli(capsys, "classify", "X^4+X+1", "--text")
    assert code == 0
    assert "verdict:" in out and "sup_rational: yes" in out
    assert "rule_trace:" in out


def test_batch_preserves_order_and_worst_code(capsys, tmp_path):
    batch = tmp_path / "polys.txt"
    batch.write_text("X^4+X+1\nX^2\nX^^2\nX^5+X^2\n")
    code, out, _ = run_cli(capsys, "classify", "--batch", str(batch))
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 2
    assert len(lines) == 4
    assert lines[0]["input"]["text"] == "X^4+X+1"
    assert lines[1]["input"]["text"] == "X^2"
    assert lines[2]["error"]["kind"] == "parse"
    assert lines[3]["verdict"]["up_meromorphic"] == "yes"
    # batch output is strictly one report per line
    assert all("\n" not in json.dumps(rep) for rep in lines)


def test_batch_rejects_text_mode(capsys, tmp_path):
    batch = tmp_path / "polys.txt"
    batch.write_text("X^2\n")
    code, _, err = run_cli(capsys, "classify", "--batch", str(batch), "--text")
    assert code == 1 and "JSON lines" in err


def test_curve_subcommand(capsys):
    code, out, _ = run_cli(capsys, "curve", "X^3-3X", "--c", "2")
    rep = json.loads(out)
    assert code == 0
    assert rep["identities_pass"] is True
    assert all(rep["shared_curve"]["identities"].values())
    assert all(rep["scaled_curve"]["identities"].values())
    scaled = rep["scaled_curve"]["census"]
    assert scaled["available"] is True
    assert scaled["critical_values"] == ["2", "-2"]
    assert scaled["pairing"] == []


def test_curve_pairing_detected(capsys):
    # critical values of X^3 - 3X are -2 and 2; c = -1 pairs them both
    # ways, and the matching lines make the curve split
    code, out, _ = run_cli(capsys, "curve", "X^3-3X", "--c", "-1")
    rep = json.loads(out)
    assert code == 0
    census = rep["scaled_curve"]["census"]
    assert sorted(census["pairing"]) == [[0, 1], [1, 0]]
    assert census["irreducible"] is False


def test_curve_census_abstains_on_zero_critical_value(capsys):
    # P(1) = 0 at the critical point 1, so (1, 1) is singular on the
    # scaled curve but invisible to the pairing census
    code, out, _ = run_cli(capsys, "curve", "X^3-3X+2", "--c", "2")
    rep = json.loads(out)
    assert code == 0
    census = rep["scaled_curve"]["census"]
    assert census["available"] is False
    assert "zero" in census["reason"]


def test_curve_rejects_degenerate_multiplier(capsys):
    code, out, _ = run_cli(capsys, "curve", "X^3-3X", "--c", "1")
    assert code == 2
    assert "avoid 0 and 1" in json.loads(out)["error"]["message"]


def test_curve_without_multiplier_reports_shared_only(capsys):
    code, out, _ = run_cli(capsys, "curve", "X^4+X+1")
    rep = json.loads(out)
    assert code == 0
    assert "scaled_curve" not in rep
    assert rep["shared_curve"]["census"]["genus"] == 1


def test_forms_subcommand(capsys):
    code, out, _ = run_cli(capsys, "forms", "shared", "2,1,1")
    rep = json.loads(out)
    assert code == 0
    assert rep["certificate"]["verdict"] == "brody"
    assert rep["replayed"] is True

    code, out, _ = run_cli(capsys, "forms", "scaled", "3,1",
                           "--pairing", "0:1")
    rep = json.loads(out)
    assert code == 0
    assert rep["certificate"]["verdict"] == "none"


def test_forms_rejects_bad_pairing(capsys):
    code, _, err = run_cli(capsys, "forms", "scaled", "2,1",
                           "--pairing", "0:0")
    assert code == 1 and "pair" in err


def test_corollary_subcommand(capsys):
    code, out, _ = run_cli(capsys, "corollary", "0", "5", "2", "1", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["match"] is True
    assert rep["table"]["sup_meromorphic"] is True
    assert rep["polynomial"] == "X^5 + X^2 + 1"

    code, out, _ = run_cli(capsys, "corollary", "1/2", "4", "1", "1", "0")
    rep = json.loads(out)
    assert code == 0
    assert rep["table"] == {
        "up_rational": True, "sup_rational": False,
        "up_meromorphic": False, "sup_meromorphic": False,
    }


def test_witness_subcommand(capsys):
    code, out, _ = run_cli(capsys, "witness", "X^6+X^3")
    rep = json.loads(out)
    assert code == 0
    assert rep["witnesses"]["any_c"]["order"] == 3
    assert rep["witnesses"]["c_equals_1"]["replayed"] is True

    code, out, _ = run_cli(capsys, "witness", "X^4+X+1")
    rep = json.loads(out)
    assert rep["witnesses"] == {"any_c": None, "c_equals_1": None}


def test_selftest_fast(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--fast", "--seed", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["all_ok"] is True
    assert len(rep["criteria"]) == 9
    assert all(c["ok"] for c in rep["criteria"])
