import json
import subprocess
import sys

import pytest

from kklab import suites
from kklab.cli import main
from kklab.report import Recorder, VerificationReport
from kklab.simplicial import build_standard


@pytest.fixture
def circle(tmp_path):
    path = tmp_path / "S1.json"
    path.write_text(json.dumps(build_standard("circle").to_json()))
    return path


def test_verify_gamma_reports_sum_ring_relation(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "gamma", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["schema"] == 1 and report["summary"]["failed"] == 0
    assert any(c["anchor"] == "α₁β₁ = 1" and c["status"] == "pass" for c in report["checks"])


def test_verify_toeplitz_degree_8():
    assert main(["verify", "--suite", "toeplitz", "--degree", "8", "--quiet"]) == 0


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verify", "--suite", "power", "--degree", "3", "--seed", "5", "--json", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    ids = [c["id"] for c in data["checks"]]
    assert ids == sorted(ids)
    assert all("wall_time" not in c for c in data["checks"])


def test_timings_flag(tmp_path):
    out = tmp_path / "t.json"
    main(["verify", "--suite", "simplicial", "--timings", "--json", str(out)])
    assert all("wall_time" in c for c in json.loads(out.read_text())["checks"])


def test_failures_do_not_abort(monkeypatch, tmp_path):
    def broken(rec, opt):
        rec.run("zz.raises", "raises", lambda: 1 // 0)
        rec.run("zz.false", "false", lambda: (False, {"why": "forced"}))
        rec.add("zz.after", "after", True)
    monkeypatch.setitem(suites.SUITES, "simplicial", broken)
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "simplicial", "--json", str(out)]) == 1
    checks = {c["id"]: c for c in json.loads(out.read_text())["checks"]}
    assert checks["zz.raises"]["status"] == "fail" and "ZeroDivisionError" in checks["zz.raises"]["witness"]
    assert checks["zz.after"]["status"] == "pass"


def test_corrupted_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"simplices": {"0": ["a"],')
    assert main(["power", "--input", str(bad), "--degree", "2", "--basis", str(tmp_path / "o.json")]) == 2
    assert "invalid JSON" in capsys.readouterr().err
    assert main(["power", "--input", str(tmp_path / "missing.json"), "--degree", "2",
                 "--basis", str(tmp_path / "o.json")]) == 2


def test_bad_flags_exit_2():
    assert main(["verify", "--suite", "nope"]) == 2
    assert main(["verify", "--suite", "gamma", "--window", "0"]) == 2
    assert main(["power", "--degree", "-1", "--input", "x", "--basis", "y"]) == 2


def test_power_command(circle, tmp_path):
    out = tmp_path / "basis.json"
    assert main(["power", "--input", str(circle), "--degree", "3", "--basis", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["ranks"] == [1, 0, 1, 1] and data["basepoint"] is None
    assert main(["power", "--input", str(circle), "--degree", "3", "--basis", str(out), "--basepoint"]) == 0
    assert json.loads(out.read_text())["ranks"] == [0, 0, 1, 1]
    assert main(["power", "--input", str(circle), "--degree", "3", "--basis", str(out),
                 "--basepoint", "e"]) == 2


def test_subdivide_command(circle, tmp_path):
    out = tmp_path / "S2.json"
    assert main(["subdivide", "--input", str(circle), "--times", "2", "--out", str(out)]) == 0
    assert main(["power", "--input", str(out), "--degree", "2", "--basis", str(tmp_path / "b.json")]) == 0


def test_report_text_and_order():
    rec = Recorder("x")
    rec.add("b", "second", True)
    rec.add("a", "first", False, {"k": 1})
    rep = VerificationReport("x", {}, rec.checks)
    assert [c.id for c in rep.sorted_checks()] == ["a", "b"]
    assert rep.text().splitlines()[-1] == "x: 1/2 passed"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "kklab.cli", "verify", "--suite", "rings", "--quiet"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "passed" in proc.stdout
