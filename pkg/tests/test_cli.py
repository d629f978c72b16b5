"""Exit codes, CSV emission, flag handling."""

import pytest

from dynconn import cli
from dynconn.workload import FuzzOutcome


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# toy\n0 1\n1 2\n2 0\n3 4\n")
    return str(p)


@pytest.fixture
def temporal_file(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("0 1 0\n1 2 10\n2 3 20\n")
    return str(p)


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_build_happy_path(capsys, graph_file):
    rc, out, _ = run(capsys, "build", "--input", graph_file)
    assert rc == 0
    assert out.startswith("metric,value\n")
    assert "vertices,5\n" in out
    assert "components,2\n" in out


def test_build_2ec_mode(capsys, graph_file):
    rc, out, _ = run(capsys, "build", "--input", graph_file, "--mode", "2ec")
    assert rc == 0
    assert "classes,3\n" in out
    assert "bridges,1\n" in out


def test_bench_writes_csv_file(capsys, graph_file, tmp_path):
    out_path = tmp_path / "r.csv"
    rc, out, _ = run(capsys, "bench", "--input", graph_file, "--k", "2",
                     "--seed", "7", "--queries", "10", "--output", str(out_path))
    assert rc == 0
    assert out == ""
    text = out_path.read_text()
    assert text.startswith("metric,value\n")
    assert "cycle_k,2\n" in text
    assert "query_mean_ns," in text


def test_window_row_group_per_pct(capsys, temporal_file):
    rc, out, _ = run(capsys, "window", "--input", temporal_file,
                     "--pct", "50,100", "--queries", "0")
    assert rc == 0
    assert "window_pct,op,mean_ns,count\n" in out
    body = out.split("window_pct,op,mean_ns,count\n")[1]
    pcts = {line.split(",")[0] for line in body.strip().splitlines()}
    assert pcts == {"50", "100"}


def test_window_without_timestamps_is_usage_error(capsys, graph_file):
    rc, _, err = run(capsys, "window", "--input", graph_file)
    assert rc == 2
    assert "error:" in err


def test_bad_pct_is_usage_error(capsys, temporal_file):
    rc, _, _ = run(capsys, "window", "--input", temporal_file, "--pct", "0,5")
    assert rc == 2
    rc, _, _ = run(capsys, "window", "--input", temporal_file, "--pct", "x")
    assert rc == 2


def test_missing_input_is_io_error(capsys, tmp_path):
    rc, _, err = run(capsys, "build", "--input", str(tmp_path / "nope.txt"))
    assert rc == 1
    assert "error:" in err


def test_malformed_file_is_io_error(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n0 1 2 3\n")
    rc, _, err = run(capsys, "build", "--input", str(p))
    assert rc == 1
    assert "line 2" in err


def test_k_too_large_is_usage_error(capsys, graph_file):
    rc, _, err = run(capsys, "bench", "--input", graph_file, "--k", "99")
    assert rc == 2


def test_unknown_flag_is_usage_error(capsys, graph_file):
    rc, _, _ = run(capsys, "build", "--input", graph_file, "--bogus")
    assert rc == 2


def test_fuzz_small_clean_run(capsys):
    rc, out, err = run(capsys, "fuzz", "--n", "10", "--ops", "300", "--seed", "1")
    assert rc == 0
    assert "fuzz_violations,0\n" in out
    assert err == ""


def test_fuzz_2ec_small_clean_run(capsys):
    rc, out, _ = run(capsys, "fuzz", "--n", "8", "--ops", "200", "--mode", "2ec",
                     "--check-every", "20")
    assert rc == 0
    assert "fuzz_violations,0\n" in out


def test_fuzz_violations_exit_3(capsys, monkeypatch):
    fake = FuzzOutcome(ops=5, queries=1, checks=1,
                       violations=["op 3: query(0,1) sets=True tree=False oracle=False"],
                       violation_count=1, elapsed_s=0.0)
    monkeypatch.setattr(cli, "run_connectivity_fuzz", lambda *a, **k: fake)
    rc, out, err = run(capsys, "fuzz", "--n", "4", "--ops", "5")
    assert rc == 3
    assert "fuzz_violations,1\n" in out
    assert "violation: op 3" in err


def test_stats_reports_stream_shape(capsys, tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("0 1 5\n1 0 9\n2 2 4\n3 4 20\n")
    rc, out, _ = run(capsys, "stats", "--input", str(p))
    assert rc == 0
    assert "vertices,5\n" in out
    assert "unique_edges,2\n" in out
    assert "duplicate_events,1\n" in out
    assert "dropped_self_loops,1\n" in out
    assert "timestamped,1\n" in out
    assert "time_span,15\n" in out
