import io
import json

import pytest
from hypothesis import given

from nilfactor.cli import main
from nilfactor.errors import ParseError
from nilfactor.matrixfile import format_json, format_text, parse_json, parse_matrix, parse_text

from conftest import matrices


def run(args):
    out = io.StringIO()
    code = main(args, out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="m.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_factor_unit_pair(write):
    code, out = run(["factor", write("QQ\n3\n0 0 0\n0 0 0\n0 1 0\n")])
    assert code == 0
    assert "product check: OK" in out and "route: Nilpotent" in out


def test_factor_json(write):
    code, out = run(["factor", "--json", write("GF(5)\n3\n1 2 3\n2 4 1\n3 1 4\n")])
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["product_ok"] is True
    N1 = parse_json(json.dumps(doc["N1"]))
    N2 = parse_json(json.dumps(doc["N2"]))
    assert N1 @ N2 == parse_text("GF(5)\n3\n1 2 3\n2 4 1\n3 1 4\n")


def test_factor_exit_codes(write, capsys):
    assert run(["factor", write("QQ\n2\n1 0\n0 1\n")])[0] == 2
    assert "matrix is invertible" in capsys.readouterr().err
    assert run(["factor", write("QQ\n2\n0 0\n1 0\n")])[0] == 3
    assert "2x2" in capsys.readouterr().err
    assert run(["factor", write("QQ\n2\n0 0\n1\n")])[0] == 1
    assert run(["factor", write("RR\n1\n0\n")])[0] == 1
    assert run(["factor", "/nonexistent/file.txt"])[0] == 1


def test_verify_off(write):
    code, out = run(["factor", "--verify", "off", "--seed", "3", write("QQ\n2\n0 0\n0 4\n")])
    assert code == 0 and "not verified" in out


def test_seed_from_environment(write, monkeypatch):
    monkeypatch.setenv("NILFACTOR_SEED", "99")
    assert run(["factor", write("GF(2)\n3\n0 1 0\n1 0 0\n0 0 0\n")])[0] == 0


def test_check_and_forensics():
    code, out = run(["check", "lemma1", "--max-k", "11"])
    assert code == 0 and "lemma1: 76/76" in out
    code, out = run(["check", "sourour", "--fields", "GF(5),QQ", "--seed", "7", "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["suites"][0]["total"] >= 200
    code, out = run(["forensics", "--k", "9"])
    assert code == 0 and "wu_counterexample_k9 (recorded)" in out
    code, out = run(["forensics", "--json"])
    assert code == 0 and all(c["verdict"] == "ConfirmsPaper" for c in json.loads(out)["checks"])


def test_check_bad_field():
    assert run(["check", "lemma1", "--fields", "GF(4)"])[0] == 1


def test_json_input_accepts_integers():
    M = parse_matrix('{"field": "QQ", "n": 2, "rows": [[1, "1/2"], [0, -3]]}')
    assert format_text(M) == "QQ\n2\n1 1/2\n0 -3\n"
    with pytest.raises(ParseError):
        parse_matrix('{"field": "QQ", "n": 1, "rows": [[0.5]]}')


def test_text_parse_errors():
    for bad in ("QQ\n", "QQ\nx\n", "QQ\n2\n1 2\n", "QQ\n1\n1 2\n", "GF(3)\n1\n1/3\n"):
        with pytest.raises(ParseError):
            parse_text(bad)


@given(matrices(max_n=5))
def test_round_trip(M):
    text = format_text(M)
    assert parse_matrix(text) == M
    assert format_text(parse_matrix(text)) == text
    assert parse_matrix(format_json(M)) == M
