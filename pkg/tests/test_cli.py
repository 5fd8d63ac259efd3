import json
from fractions import Fraction

import pytest

from mestre import cli


def test_point_json_round_trip():
    P = (Fraction(-3, 4), Fraction(7, 8))
    assert cli.point_from_json(cli.point_to_json(P)) == P
    assert cli.point_from_json(cli.point_to_json(cli.INF)) is cli.INF


def test_resolve_normalization():
    assert cli.resolve_normalization(37.7257732, 603.61237, (1, 16), 1e-3) == 16
    assert cli.resolve_normalization(603.6, 603.61237, (1, 16), 1e-3) == 1
    assert cli.resolve_normalization(100.0, 603.61237, (1, 16), 1e-3) is None


@pytest.mark.parametrize("fmt,suffix", [("json", ".json"), ("csv", ".csv")])
def test_records_round_trip(tmp_path, fmt, suffix):
    records, _ = cli.family_records(Fraction(5), 0, 3)
    path = str(tmp_path / f"out{suffix}")
    cli.write_records(records, path, fmt)
    back = cli.read_records(path)
    assert [r.to_json() for r in back] == [r.to_json() for r in records]
    assert all(r.revalidate() for r in back)
    assert any(r.independent for r in back)


def test_revalidate_catches_tampering():
    records, _ = cli.family_records(Fraction(5), 2, 2)
    rec = records[0]
    rec.points[0] = ["1/1", "1/1"]
    assert not rec.revalidate()


def test_family_command_writes_json(tmp_path, capsys):
    out = tmp_path / "fam.json"
    assert cli.main(["family", "--j", "-3", "--t-range", "2..3", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["records"]) == 2
    assert "isomorphism classes" in capsys.readouterr().err


def test_reproduce_j1728_passes(tmp_path):
    out = tmp_path / "rep.json"
    assert cli.main(["reproduce", "j1728", "--json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["checks"]["det_matches_published"]["value"]["normalization_factor"] == 16


@pytest.mark.parametrize("suite", ["thm3-generic", "remark1", "remark2", "special-covers", "euler"])
def test_verify_suites_pass(suite):
    assert cli.main(["verify", suite]) == 0


def test_verify_sextic_reports_findings():
    rep = cli.cmd_verify("sextic")
    failed = {k for k, c in rep.checks.items() if c["status"] == "fail"}
    assert failed == {"D_irreducible_witness", "model_is_y2_x3_minus_16D"}
    assert cli.main(["verify", "sextic"]) == 1
    rep = cli.cmd_verify("sextic", witness_bound=300)
    assert rep.checks["D_irreducible_witness"]["status"] == "pass"


def test_bad_arguments_exit():
    with pytest.raises(SystemExit):
        cli.main(["reproduce", "j5"])
    with pytest.raises(SystemExit):
        cli.main(["verify", "nothing"])
