"""Command-line interface: commands, formats, exit codes."""

import json

import pytest

from noncross.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rootsys_info(capsys):
    code, out, _ = run(capsys, "rootsys", "info", "D4")
    assert code == 0
    assert "coxeter_number: 6" in out
    assert "group_order: 192" in out


def test_rootsys_info_json(capsys):
    code, out, _ = run(capsys, "rootsys", "info", "A2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == 2
    assert payload["degrees"] == [2, 3]


def test_nc_enumerate(capsys):
    code, out, _ = run(capsys, "nc", "enumerate", "A3")
    assert code == 0
    assert "elements: 14" in out


def test_nc_enumerate_cache_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "nc", "enumerate", "A3",
                     "--cache-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "nc_A3.jsonl").exists()


def test_decomp_count(capsys):
    code, out, _ = run(capsys, "decomp", "count", "A3", "A1,A1,A1")
    assert code == 0
    assert out.strip() == "16"


def test_decomp_table_full_rank_only(capsys):
    code, out, _ = run(capsys, "decomp", "table", "A2", "--full-rank-only",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"]["A2"] == 1
    assert payload["entries"]["A1,A1"] == 3


def test_chi(capsys):
    code, out, _ = run(capsys, "chi", "A2")
    assert code == 0
    assert out.strip() == "y^2 - 3*y + 2"


def test_zeta_value(capsys):
    code, out, _ = run(capsys, "zeta", "A2")
    assert code == 0
    # zeta(2) must equal the element count 5
    assert "z" in out


def test_mtriangle_symbolic(capsys):
    code, out, _ = run(capsys, "mtriangle", "A1", "--symbolic")
    assert code == 0
    assert "m" in out


def test_ftriangle(capsys):
    code, out, _ = run(capsys, "ftriangle", "A2", "--m", "1")
    assert code == 0
    assert "none" in out


def test_linsys_replay_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "linsys", "replay", "D4",
                       "--report", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["dimension"] == 0


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "zeta")
    assert code == 0
    assert "failed: 0" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2


def test_bad_label_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "chi", "Q7")
    assert exc.value.code == 2


def test_bad_threads_exit_code(capsys):
    code, _, _ = run(capsys, "chi", "A2", "--threads", "0")
    assert code == 2


def test_csv_format(capsys):
    code, out, _ = run(capsys, "rootsys", "info", "A2", "--format", "csv")
    assert code == 0
    assert "rank,2" in out
