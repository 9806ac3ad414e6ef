import json
from fractions import Fraction

import pytest

from fibonomials.exact import ALPHA, TruncSeries
from fibonomials.report import FAIL, PASS, RECORDED, VerificationReport, entry, fmt_value, literal_entry


def test_fmt_value():
    assert fmt_value(5) == "5"
    assert fmt_value(Fraction(6, 3)) == "2"
    assert fmt_value(Fraction(-1, 3)) == "-1/3"
    assert fmt_value(True) == "true"
    assert fmt_value([1, Fraction(1, 2)]) == "[1, 1/2]"
    assert fmt_value(TruncSeries([1, 2])) == "[1, 2]"
    assert fmt_value(None) == "-"
    assert fmt_value(ALPHA) == str(ALPHA)
    with pytest.raises(TypeError):
        fmt_value(1.5)


def test_entry_status():
    assert entry("x.y", {"n": 1}, 3, 3).status == PASS
    assert entry("x.y", {"n": 1}, 3, 4).status == FAIL
    assert entry("x.y", {}, TruncSeries([1, 2]), [1, 2]).status == PASS
    with pytest.raises(ValueError):
        entry("x.y", {}, 1, 1, "maybe")


def test_literal_entry():
    assert literal_entry("a", {}, 1, 1).status == PASS
    assert literal_entry("a", {}, 1, 2).status == RECORDED


def test_report_sorting_and_summary():
    es = [
        entry("b.z", {"n": 10}, 1, 1),
        entry("b.z", {"n": 2}, 1, 1),
        entry("a.z", {"n": 1}, 1, 2),
        literal_entry("a.w", {"n": 1}, 1, 2),
    ]
    r = VerificationReport(es)
    assert [e.identity for e in r.entries] == ["a.w", "a.z", "b.z", "b.z"]
    assert [dict(e.params)["n"] for e in r.entries[2:]] == [2, 10]
    assert r.summary() == {"pass": 2, "fail": 1, "recorded": 1}
    assert not r.ok
    assert r.families() == ["a", "b"]
    assert len(r.failures()) == 1
    text = r.text()
    assert "FAIL a.z (n=1): 1 != 2" in text
    assert text.endswith("summary: pass=2 fail=1 recorded=1 families=2\n")


def test_report_json_roundtrip():
    r = VerificationReport([entry("a", {"n": 3, "a": "1/3"}, Fraction(1, 2), Fraction(1, 2))])
    data = json.loads(r.dumps())
    assert data["summary"] == {"pass": 1, "fail": 0, "recorded": 0}
    assert data["entries"] == [{"identity": "a", "params": {"a": "1/3", "n": "3"}, "lhs": "1/2", "rhs": "1/2", "status": "pass"}]
    assert VerificationReport(reversed(r.entries)).dumps() == r.dumps()


def test_fmt_value_huge_integers():
    import sys

    v = 7 * 10**12000 + 123
    limit = sys.get_int_max_str_digits() if hasattr(sys, "get_int_max_str_digits") else 0
    out = fmt_value(v)
    assert out == "7" + "0" * 11997 + "123"
    assert fmt_value(-v) == "-" + out
    assert fmt_value(Fraction(v, 3)) == out + "/3"
    if limit:
        assert sys.get_int_max_str_digits() == limit
