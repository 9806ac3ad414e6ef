import json
import subprocess
import sys

import pytest

from fibonomials import cli
from fibonomials.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_default(capsys):
    assert run(capsys, "eval", "7", "3") == (0, "260\n", "")


def test_eval_all_routes(capsys):
    code, out, _ = run(capsys, "eval", "7", "3", "--method", "all")
    assert code == 0
    lines = out.splitlines()
    assert [line.split()[0] for line in lines] == list(cli.ROUTES)
    assert all(line.split()[1] == "260" for line in lines)


@pytest.mark.parametrize("method", list(cli.ROUTES))
def test_eval_each_route_edges(capsys, method):
    for n, k in [(0, 0), (5, 0), (5, 5), (9, 4)]:
        code, out, _ = run(capsys, "eval", str(n), str(k), "--method", method)
        assert code == 0
        assert out.strip() == {(0, 0): "1", (5, 0): "1", (5, 5): "1", (9, 4): "12376"}[(n, k)]


def test_eval_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "eval", "6", "3", "--method", "all")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 6 and payload["k"] == 3
    assert set(payload["values"].values()) == {"60"}


def test_eval_disagreement_exits_1(capsys, monkeypatch):
    monkeypatch.setitem(cli.ROUTES, "product", lambda n, k: 0)
    code, _, err = run(capsys, "eval", "5", "2", "--method", "all")
    assert code == 1
    assert "disagree" in err


def test_usage_errors_exit_2(capsys):
    for argv in (["eval", "3", "4"], ["eval", "-1", "0"], ["triangle", "0"], ["cf", "row", "3", "0"], ["bogus"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_triangle(capsys):
    code, out, _ = run(capsys, "triangle", "5")
    assert code == 0
    assert out == "1\n1 1\n1 1 1\n1 2 2 1\n1 3 6 3 1\n"
    code, out, _ = run(capsys, "triangle", "3", "--format", "json")
    assert json.loads(out) == {"rows": [["1"], ["1", "1"], ["1", "1", "1"]]}


def test_cf_row(capsys):
    code, out, _ = run(capsys, "cf", "row", "6", "8")
    assert code == 0
    assert out.splitlines()[-1] == "coefficients: 1, -13, -104, 260, 260, -104, -13, 1, 8771626578"
    assert "level 6: 18 x" in out


def test_cf_column_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "cf", "column", "7", "8")
    payload = json.loads(out)
    assert payload["coefficients"] == [
        "1", "21", "714", "19635", "582505", "16776144", "488605194", "14169550626", "411591708660"
    ]
    assert len(payload["levels"]) == 8


def test_series(capsys):
    assert run(capsys, "series", "row", "7")[1] == "1, 13, -104, -260, 260, 104, -13, -1\n"
    assert run(capsys, "series", "column", "7", "--order", "3")[1] == "1, 21, 714, 19635\n"


def test_verify_suite_text(capsys):
    code, out, _ = run(capsys, "verify", "lemma2", "--max-n", "4")
    assert code == 0
    assert out.splitlines()[-1].startswith("summary: pass=")
    assert "fail=0" in out.splitlines()[-1]


def test_verify_json_and_report(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "trudi", "--max-n", "3", "--format", "json", "--report", str(path))
    assert code == 0
    payload = json.loads(out)
    assert path.read_text() == out
    assert set(payload) == {"version", "summary", "entries"}
    assert set(payload["summary"]) == {"pass", "fail", "recorded"}
    assert payload["summary"]["recorded"] > 0
    for e in payload["entries"]:
        assert set(e) == {"identity", "params", "lhs", "rhs", "status"}
        assert e["status"] in {"pass", "fail", "recorded-discrepancy"}


def test_verify_failure_exits_1(capsys, monkeypatch):
    import fibonomials.verify as verify

    monkeypatch.setattr(verify, "lemma2_sum", lambda n, k: 1)
    code, out, _ = run(capsys, "verify", "lemma2", "--max-n", "2")
    assert code == 1
    assert "FAIL lemma2.sum" in out


def test_verify_deterministic_across_jobs(capsys):
    a = run(capsys, "verify", "all", "--max-n", "5", "--format", "json")[1]
    b = run(capsys, "verify", "all", "--max-n", "5", "--format", "json", "--jobs", "3")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fibonomials", "eval", "10", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "136136\n"
