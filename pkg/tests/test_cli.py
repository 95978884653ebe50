import io
import json
import subprocess
import sys

import pytest

from chiral_resolve import cli
from chiral_resolve.report import VerificationReport
from chiral_resolve.suites import SUITES, Options, all_tasks, run_tasks


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_char_csv_row():
    code, out, _ = run("char", "--space", "A", "--sector", "even", "--m", "0", "--cutoff", "10", "--format", "csv")
    assert code == 0
    assert out.strip() == "1,0,1,1,2,2,4,4,7,8,12"


def test_char_other_spaces():
    for space in ("W", "Htilde", "Hcoh"):
        for sector in ("even", "odd"):
            code, out, _ = run("char", "--space", space, "--sector", sector, "--m", "1", "--cutoff", "6")
            assert code == 0, (space, sector, out)


def test_sp_dimension():
    code, out, _ = run("sp", "--N", "3", "--k", "3")
    assert code == 0 and out.strip() == "dim=14"
    code, out, _ = run("sp", "--N", "2", "--format", "csv")
    assert out.strip() == "1,4,5"


def test_sp_filtration():
    code, out, _ = run("sp", "--N", "2", "--m", "0", "--sector", "odd", "--cutoff", "6")
    assert code == 0 and "sp-filtration" in out


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch"],
    ["char", "--space", "A", "--bogus"],
    ["char", "--space", "Q"],
    ["sp", "--N", "2", "--k", "3"],
    ["sp", "--N", "1", "--m", "3", "--sector", "odd"],
    ["resolution", "--terms", "1"],
    ["char", "--space", "A", "--cutoff", "-1"],
    [],
])
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err


def test_bad_jobs_environment(monkeypatch):
    monkeypatch.setenv("CHIRAL_RESOLVE_JOBS", "many")
    code, _, err = run("verify", "koszul", "--cutoff", "2")
    assert code == 2 and "CHIRAL_RESOLVE_JOBS" in err


def test_internal_error_exit_code(monkeypatch):
    def boom(args, out):
        raise RuntimeError("kaput")
    monkeypatch.setitem(cli.COMMANDS, "koszul", boom)
    code, _, err = run("koszul")
    assert code == 3 and "kaput" in err


def test_failing_check_exits_one(monkeypatch):
    def failing(args, out):
        rep = VerificationReport("x")
        rep.add({"energy": 0}, 1, 2)
        return cli._finish([rep], args, out)
    monkeypatch.setitem(cli.COMMANDS, "koszul", failing)
    code, out, _ = run("koszul")
    assert code == 1 and "FAIL" in out


def test_json_lines_and_report_file(tmp_path):
    path = tmp_path / "r.jsonl"
    code, out, _ = run("verify", "odd-free", "--cutoff", "4", "--m-max", "1", "--format", "json",
                       "--report", str(path), "--no-timestamp")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        d = json.loads(line)
        assert set(d) == {"check_name", "parameters", "status", "cells", "first_mismatch"}
        assert d["status"] == "pass"
    assert path.read_text().strip().splitlines() == lines


def test_timestamp_present_by_default():
    _, out, _ = run("koszul", "--cutoff", "2", "--format", "json")
    assert "timestamp" in json.loads(out)


def test_csv_verify_output():
    code, out, _ = run("verify", "koszul", "--cutoff", "3", "--format", "csv")
    rows = out.strip().splitlines()
    assert rows[0].startswith("check_name,") and rows[1].startswith("koszul,")


def test_subcommands_run():
    for argv in (["resolution", "--m", "0", "--cutoff", "4"], ["derham", "--sector", "odd", "--m", "0", "--cutoff", "4"],
                 ["bf-check", "--sector", "even", "--cutoff", "3"], ["koszul", "--k", "1", "--cutoff", "4"]):
        code, out, _ = run(*argv)
        assert code == 0, (argv, out)


def test_every_suite_expands():
    opt = Options(cutoff=3, m_max=1)
    for name in SUITES:
        tasks = all_tasks(name, opt)
        assert tasks, name
    assert len(all_tasks("all", opt)) == sum(len(all_tasks(n, opt)) for n in SUITES)


def test_parallel_runner_keeps_order():
    tasks = all_tasks(["characters", "odd-free"], Options(cutoff=4, m_max=1))
    serial = [r.to_json() for r in run_tasks(tasks, 1)]
    parallel = [r.to_json() for r in run_tasks(tasks, 3)]
    assert serial == parallel


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "chiral_resolve", "sp", "--N", "2", "--k", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "dim=5"
