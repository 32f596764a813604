import json
import subprocess
import sys

import pytest

from qdolbeault import __version__
from qdolbeault.checks import (CHECKS, CheckConfig, Record, Report, emit_report,
                               parse_scalar_literal, run_checks)
from qdolbeault.cli import main
from qdolbeault.errors import ConfigurationError
from qdolbeault.scalar import Scalar, v_pow

RECORD_KEYS = ["check_id", "paper_anchor", "status", "witness", "millis"]


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "qdolbeault", *args],
                          capture_output=True, timeout=600)


def test_json_report_is_byte_stable():
    a = run_cli("--checks", "scalar,rootvec,dirac.main-theorem", "--format", "json")
    b = run_cli("--checks", "scalar,rootvec,dirac.main-theorem", "--format", "json")
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["tool"] == "qdolbeault" and doc["version"] == __version__
    for rec in doc["checks"]:
        assert list(rec) == RECORD_KEYS
        assert rec["status"] in ("pass", "fail", "skipped")
        assert rec["millis"] is None
        assert rec["paper_anchor"]


def test_empty_report_is_valid():
    doc = json.loads(emit_report(Report(CheckConfig(), []), "json"))
    assert doc["checks"] == []
    assert doc["summary"]["total"] == 0
    assert emit_report(Report(CheckConfig(), []), "text").endswith(b"\n")


def test_passing_record_carries_anchor():
    rep = run_checks(CheckConfig(checks=["dirac.main-theorem"]))
    (rec,) = rep.records
    assert rec.status == "pass" and rec.witness is None
    assert rec.paper_anchor == "D^2 ~ C (x) T"
    doc = json.loads(emit_report(rep, "json"))
    assert doc["checks"][0]["paper_anchor"] == rec.paper_anchor


def test_failing_record_has_monomial_witness():
    rep = run_checks(CheckConfig(checks=["rootvec.cal-cross-printed"]))
    (rec,) = rep.records
    assert rec.status == "fail"
    assert rec.witness == "cal-cross-printed[1,2]: (-v^6 + v^2)*F2*K[-1,-1]*E1.E2"
    text = emit_report(rep, "text").decode()
    assert "FAIL" in text and rec.witness in text


def test_all_ones_profile_trips_exactly_the_affected_checks():
    rep = run_checks(CheckConfig(profile="all-ones"))
    failed = sorted(r.check_id for r in rep.failed)
    assert failed == ["dirac.main-theorem", "dirac.off-diagonal-vanishes",
                      "rootvec.cal-cross-printed"]
    for r in rep.failed:
        assert r.witness and "*" in r.witness


def test_default_run():
    rep = run_checks(CheckConfig())
    assert [r.check_id for r in rep.records] == [c.check_id for c in CHECKS]
    assert [r.check_id for r in rep.failed] == ["rootvec.cal-cross-printed"]
    controls = [r for r in rep.records if "negative-control" in r.check_id]
    assert len(controls) == 2
    assert all(r.status == "pass" and r.witness.startswith("expected ") for r in controls)


def test_timings_flag():
    rep = run_checks(CheckConfig(checks=["scalar"], timings=True))
    assert all(isinstance(r.millis, float) for r in rep.records)


@pytest.mark.parametrize("kwargs,msg", [
    (dict(N=5), "outside the supported range"),
    (dict(N=4), "--extended"),
    (dict(degree_bound=2), "at least 3"),
    (dict(profile="nope"), "profile"),
    (dict(c0=0), "nonzero"),
    (dict(checks=["nosuch"]), "nosuch"),
])
def test_configuration_errors(kwargs, msg):
    with pytest.raises(ConfigurationError, match=msg):
        run_checks(CheckConfig(**kwargs))


def test_small_bound_reports_minimal_bound():
    with pytest.raises(ConfigurationError, match="minimal sufficient bound is 5"):
        run_checks(CheckConfig(N=3, degree_bound=4, checks=["dirac.main-theorem"]))


def test_exit_codes(tmp_path, capsys):
    assert main(["--checks", "scalar"]) == 0
    assert main(["--checks", "rootvec.cal-cross-printed"]) == 1
    assert main(["-N", "5"]) == 2
    out = tmp_path / "r.json"
    assert main(["--checks", "qext", "--format", "json", "-o", str(out)]) == 0
    assert json.loads(out.read_bytes())["summary"]["failed"] == 0
    capsys.readouterr()
    assert main(["--list-checks"]) == 0
    assert capsys.readouterr().out.count("\n") == len(CHECKS)


def test_bad_literal_is_a_usage_error():
    proc = run_cli("--c1", "x+")
    assert proc.returncode == 2
    assert b"scalar literal" in proc.stderr


def test_scalar_literals():
    assert parse_scalar_literal("symbolic") == "symbolic"
    assert parse_scalar_literal("3/4") == Scalar(3) / 4
    assert parse_scalar_literal("v^3 + 2") == v_pow(3) + 2
    assert parse_scalar_literal("(v - 1)/(2v^-1)") == (v_pow(1) - 1) / (v_pow(-1) * 2)
    for bad in ("", "v^", "(v", "s", "1/0"):
        with pytest.raises(ConfigurationError):
            parse_scalar_literal(bad)


def test_record_shape():
    r = Record("a.b", "x", "pass", None, None)
    assert r.check_id == "a.b"
