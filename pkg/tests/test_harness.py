import json

import pytest

from pqeuler import harness
from pqeuler.cli import main, parse_weight


@pytest.mark.parametrize("cid", harness.CHECK_IDS)
def test_every_check_passes_small(cid):
    param = {"contra": 8, "sec7": 8}.get(cid, 5)
    report = harness.check(cid, param)
    assert report.passed, report.witness


def test_check_report_shape():
    report = harness.check("euler_roselle", 4)
    data = report.to_json()
    assert data["check"] == "euler_roselle"
    assert data["param"] == 4
    assert data["status"] == "pass"
    assert "witness" not in data


def test_jv_example_values():
    # the odd case at n=5 equals -(2 + 5q + 5q^2 + 3q^3 + q^4)
    from pqeuler.algebra import LaurentPoly
    from pqeuler.harness import MINUS_ONE, _signed
    lhs = _signed("S", 5, "wex", "cros", MINUS_ONE)
    from pqeuler.qeuler import e_q
    assert lhs == MINUS_ONE ** 3 * e_q(5, "cf")
    assert _signed("S", 4, "wex", "cros", MINUS_ONE) == LaurentPoly()


def test_euler_roselle_single_derangement():
    from pqeuler.harness import MINUS_ONE, _signed
    assert _signed("D", 2, "exc", None, MINUS_ONE).as_int() == -1


def test_unknown_check():
    with pytest.raises(ValueError):
        harness.check("nope")


# ---------------------------------------------------------------------------
# CLI


def test_cli_stats(capsys):
    assert main(["stats", "231"]) == 0
    out = capsys.readouterr().out
    assert "ndes=2" in out and "fmax=1" in out and "toht=0" in out
    assert "thto=1" in out and "mad=3" in out


def test_cli_stats_json(capsys):
    assert main(["stats", "231", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mad"] == 3


def test_cli_verify_pass_and_json(capsys):
    assert main(["verify", "jv", "--n", "5"]) == 0
    capsys.readouterr()
    assert main(["verify", "jv", "--n", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "pass"


def test_cli_cf_text(capsys):
    assert main(["cf", "secant-pq", "--order", "4"]) == 0
    assert capsys.readouterr().out.strip() == \
        "1 + t^2 + (p^2 + 2*p*q + q^2 + 1)*t^4"


def test_cli_table(capsys):
    assert main(["table", "--family", "S", "--n", "2",
                 "--weight", "x=wex,y=fix,q=cros,p=nest,s=inv"]) == 0
    assert capsys.readouterr().out.strip() == "x^2*y^2 + x*s"


def test_cli_table_euler(capsys):
    assert main(["table", "--what", "euler", "--n", "3"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["E"] for r in rows] == ["1", "1", "1", "2"]


def test_cli_bij(capsys):
    assert main(["bij", "csz", "412796583"]) == 0
    out = capsys.readouterr().out
    assert "249385716" in out and "biword" in out
    assert main(["bij", "phi", "123"]) == 0
    assert capsys.readouterr().out.strip() == "132"


def test_cli_bij_verify(capsys):
    assert main(["bij", "fv", "--verify", "--n", "5"]) == 0
    assert main(["bij", "psi", "--verify", "--n", "5"]) == 0


def test_cli_export(tmp_path, capsys):
    out_file = tmp_path / "table.json"
    assert main(["export", "--n", "4", "--out", str(out_file)]) == 0
    rows = json.loads(out_file.read_text())
    assert rows[4]["E"] == "5"


def test_cli_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main(["verify", "not-a-check"]) == 2
    assert main(["cf", "secant-pq"]) == 2  # missing --order
    assert main(["table", "--n", "3"]) == 2  # no family/weight
    assert main(["bij", "fv"]) == 2  # no perm, no --verify
    assert main(["bij", "fv", "--verify"]) == 2  # missing --n


def test_parse_weight():
    w = parse_weight("q=toht+2*thto,x=ndes")
    assert w == {"q": {"toht": 1, "thto": 2}, "x": {"ndes": 1}}
    with pytest.raises(Exception):
        parse_weight("q=nosuchstat")
