import io
import subprocess
import sys

import pytest

from dualize import cli

from conftest import EXAMPLE_TEXT


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin.encode())))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def call(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


@pytest.mark.parametrize("algo", ["rs", "dfs", "dl", "brute"])
def test_solve_example(call, algo):
    code, out, err = call(["solve", "--algorithm", algo], EXAMPLE_TEXT)
    assert code == 0
    assert sorted(out.splitlines()) == ["1 2", "1 3", "1 4", "2 3"]
    assert "edges=3 verts=4 size=7 mhs=4 nodes=" in err
    assert "seconds=" in err


def test_solve_count_only(call, tmp_path):
    code, out, _ = call(["gen", "M", "20", "-o", str(tmp_path / "m20.txt")])
    assert code == 0 and out == ""
    code, out, err = call(["solve", "--count-only", "--algorithm", "dfs", str(tmp_path / "m20.txt")])
    assert code == 0 and out == ""
    assert "mhs=1024" in err


def test_solve_full_coedge_gives_empty_edge(call):
    code, out, err = call(["solve", "--coedges"], "1 2 3\n1\n")
    assert code == 0 and out == ""
    assert "mhs=0" in err


@pytest.mark.parametrize("flags", [["--complement"], ["--bits", "off"], ["--prune", "off"],
                                   ["--sort-edges", "size-asc"], ["--engine", "bitset"],
                                   ["--minimize"]])
def test_solve_flags_do_not_change_output(call, flags):
    text = "1 2\n1 3\n2 3 4\n1 2 5\n"
    _, base, _ = call(["solve"], text)
    code, out, _ = call(["solve", *flags], text)
    assert code == 0
    assert sorted(out.splitlines()) == sorted(base.splitlines())


def test_solve_output_file(call, tmp_path):
    dest = tmp_path / "dual.txt"
    code, out, _ = call(["solve", "-o", str(dest)], EXAMPLE_TEXT)
    assert code == 0 and out == ""
    assert dest.read_text() == "1 2\n1 3\n1 4\n2 3\n"


def test_solve_output_is_deterministic(call):
    first = call(["solve", "-a", "dfs"], "1 2 3\n3 4\n2 5\n")[1]
    assert call(["solve", "-a", "dfs"], "1 2 3\n3 4\n2 5\n")[1] == first


def test_exit_codes(call, monkeypatch):
    assert call(["solve", "--prune", "maybe"])[0] == 1
    assert call(["frobnicate"])[0] == 1
    assert call(["solve", "--max-outputs", "-1"], EXAMPLE_TEXT)[0] == 1
    assert call(["solve"], "1 a\n")[0] == 2
    assert call(["solve", "/nonexistent/file"])[0] == 2
    code, out, err = call(["solve", "--max-outputs", "2"], EXAMPLE_TEXT)
    assert code == 3
    assert len(out.splitlines()) == 2
    monkeypatch.setenv(cli.TIME_LIMIT_ENV, "soon")
    assert call(["solve"], EXAMPLE_TEXT)[0] == 1


def test_time_limit_env(call, monkeypatch, tmp_path):
    path = tmp_path / "m24.txt"
    call(["gen", "M", "24", "-o", str(path)])
    monkeypatch.setenv(cli.TIME_LIMIT_ENV, "0.000001")
    code, _, err = call(["solve", "--count-only", str(path)])
    assert code == 3
    assert "timeout" in err


def test_gen(call):
    assert call(["gen", "M", "4"])[1] == "1 2\n3 4\n"
    assert len(call(["gen", "TH", "40"])[1].splitlines()) == 400
    a = call(["gen", "RANDOM", "8", "5", "0.5", "--seed", "42"])[1]
    assert a == call(["gen", "RANDOM", "8", "5", "0.5", "--seed", "42"])[1]
    assert a.splitlines()[3] == "1 2"
    assert call(["gen", "TH", "5"])[0] == 1
    assert call(["gen", "RANDOM", "8"])[0] == 1
    assert call(["gen", "M", "4", "3"])[0] == 1


def test_verify(call):
    text = call(["gen", "RANDOM", "12", "15", "0.3", "--seed", "7"])[1]
    code, _, err = call(["verify", "--algorithms", "rs,dfs,dl,brute"], text)
    assert code == 0 and "agree" in err
    sd = call(["gen", "SDTH", "42"])[1]
    code, _, err = call(["verify", "--algorithms", "rs,dfs"], sd)
    assert code == 0
    assert "rs: mhs=422" in err and "dfs: mhs=422" in err
    dense = call(["gen", "RANDOM", "16", "40", "0.8", "--seed", "3"])[1]
    assert call(["verify", "--algorithms", "rs,crs,dfs,cdfs"], dense)[0] == 0


def test_verify_usage(call):
    assert call(["verify", "--algorithms", "rs"], EXAMPLE_TEXT)[0] == 1
    assert call(["verify", "--algorithms", "rs,magic"], EXAMPLE_TEXT)[0] == 1
    wide = " ".join(str(i) for i in range(1, 31)) + "\n"
    assert call(["verify", "--algorithms", "rs,brute"], wide)[0] == 1


def test_verify_reports_mismatch(call, monkeypatch):
    real = cli.run

    def broken(H, algorithm, sink, **kw):
        stats = real(H, algorithm, sink, **kw)
        if algorithm == "dfs":
            sink.sets.pop()
        return stats

    monkeypatch.setattr(cli, "run", broken)
    code, _, err = call(["verify", "--algorithms", "rs,dfs"], EXAMPLE_TEXT)
    assert code == 4
    assert "first differing set" in err and "(only in rs)" in err


def test_bench(call, tmp_path):
    listing = tmp_path / "instances.txt"
    inst = tmp_path / "ex.txt"
    inst.write_text(EXAMPLE_TEXT)
    listing.write_text(f"# comment\nM:8\nTH:40\n{inst}\n")
    ratios = tmp_path / "ratios.csv"
    code, out, _ = call(["bench", "--instances", str(listing), "--algorithms", "rs,dfs",
                         "--ratios", str(ratios)])
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()]
    assert rows[0] == cli.CSV_HEADER
    assert len(rows) == 1 + 3 * 2 * 2
    mhs = {(r[0], r[1], r[2]): int(r[6]) for r in rows[1:]}
    assert mhs[("M(8)", "rs", "on")] == 16
    assert mhs[("TH(40)", "dfs", "off")] == 21
    assert mhs[("ex.txt", "rs", "off")] == 4
    lines = ratios.read_text().splitlines()
    assert lines[0] == "instance,algorithm,time_ratio,node_ratio"
    assert len(lines) == 1 + 6


def test_bench_empty_and_timeout(call):
    code, out, _ = call(["bench"])
    assert code == 0
    assert out == ",".join(cli.CSV_HEADER) + "\n"
    code, out, _ = call(["bench", "M:24", "--algorithms", "rs", "--prune", "on",
                         "--time-limit", "0.000001"])
    assert code == 0
    assert out.splitlines()[1].endswith(",timeout")


def test_bench_usage(call):
    assert call(["bench", "NOPE:3"])[0] == 1
    assert call(["bench", "M:4", "--prune", "sometimes"])[0] == 1
    assert call(["bench", "M:4", "--algorithms", "xyz"])[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dualize", "solve", "-a", "dfs"],
                          input=EXAMPLE_TEXT, capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert sorted(proc.stdout.splitlines()) == ["1 2", "1 3", "1 4", "2 3"]
    assert proc.stderr.startswith("edges=3 verts=4 size=7 mhs=4 ")
