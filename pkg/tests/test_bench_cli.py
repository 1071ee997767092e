import os
import subprocess
import sys

import numpy as np
import pytest

from treepmq.bench import CSV_HEADER, BenchConfig, run_bench
from treepmq.cli import main
from treepmq.selftest import run_selftest


def test_csv_header_exact():
    assert CSV_HEADER == (
        "algo,k,n,shape,seed,query_count,c,strategy,"
        "build_ms,oracle_bytes,avg_query_ns,max_comparisons,avg_comparisons"
    )


def test_config_validation():
    with pytest.raises(ValueError):
        BenchConfig(algo="quantum").validate()
    with pytest.raises(ValueError):
        BenchConfig(k=-1).validate()
    with pytest.raises(ValueError):
        BenchConfig(strategy="magic").validate()
    BenchConfig(k="alpha").validate()


@pytest.mark.parametrize("algo,max_cmp", [("basic", 0), ("cartesian", 0)])
def test_zero_comparison_algos(algo, max_cmp):
    row = run_bench(BenchConfig(algo=algo, n=512, query_count=4000), build_repeats=1)
    assert row.max_comparisons == max_cmp


def test_recursive_budget_column():
    row = run_bench(BenchConfig(algo="recursive", k=1, n=2048, query_count=4000), build_repeats=1)
    assert row.max_comparisons <= 2
    row = run_bench(BenchConfig(algo="recursive", k=2, n=2048, query_count=4000), build_repeats=1)
    assert row.max_comparisons <= 4


def test_deterministic_nontiming_columns():
    cfg = BenchConfig(algo="recursive", k=2, n=1024, query_count=3000, seed=9)
    a = run_bench(cfg, build_repeats=1)
    b = run_bench(cfg, build_repeats=1)
    assert a.oracle_bytes == b.oracle_bytes
    assert a.max_comparisons == b.max_comparisons
    assert a.avg_comparisons == b.avg_comparisons


def test_brute_algo_runs():
    row = run_bench(BenchConfig(algo="brute", n=256, query_count=1000), build_repeats=1)
    assert row.oracle_bytes > 0


def test_alpha_mode():
    row = run_bench(BenchConfig(algo="recursive", k="alpha", n=4096, query_count=2000), build_repeats=1)
    assert row.max_comparisons <= 2 * 2  # alpha(4096) = 2
    assert row.csv().startswith("recursive,alpha,4096,")


def test_selftest_passes():
    assert run_selftest(emit=lambda s: None) == 0


def test_selftest_detects_injected_boundary_bug():
    lines: list[str] = []
    failures = run_selftest(emit=lines.append, inject_boundary_bug=True)
    assert failures >= 1
    assert any("boundary violation" in ln for ln in lines)


def test_selftest_deterministic():
    a: list[str] = []
    b: list[str] = []
    assert run_selftest(emit=a.append) == 0
    assert run_selftest(emit=b.append) == 0
    assert a == b


def test_cli_gen_query_round_trip(tmp_path, capsys):
    tree_file = tmp_path / "t.txt"
    q_file = tmp_path / "q.txt"
    assert main(["gen", "--n", "40", "--seed", "5", "--out", str(tree_file)]) == 0
    q_file.write_text("0 39\n7 7\n3 11\n")
    assert main(["query", "--tree", str(tree_file), "--queries", str(q_file), "--algo", "recursive", "--k", "2"]) == 0
    rec = capsys.readouterr().out.strip().splitlines()
    assert main(["query", "--tree", str(tree_file), "--queries", str(q_file), "--algo", "brute"]) == 0
    brute = capsys.readouterr().out.strip().splitlines()
    assert [ln.split()[0] for ln in rec] == [ln.split()[0] for ln in brute]
    assert rec[1].split()[0] == "none"
    for ln in rec:
        assert int(ln.split()[1]) <= 4


def test_cli_boruvka_format(tmp_path, capsys):
    tree_file = tmp_path / "t.txt"
    main(["gen", "--n", "12", "--seed", "1", "--out", str(tree_file)])
    assert main(["boruvka", "--tree", str(tree_file), "--balanced"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    size = int(out[0])
    parents = [tuple(map(int, ln.split())) for ln in out[1 : size + 1]]
    assert sum(1 for p, _ in parents if p == -1) == 1  # one root
    assert int(out[size + 1]) == 12
    leaf_map = list(map(int, out[size + 2].split()))
    assert len(leaf_map) == 12


def test_cli_bench_csv(tmp_path, capsys):
    assert main(["bench", "--n", "512", "--queries", "1000", "--build-repeats", "1"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == CSV_HEADER
    assert out[1].startswith("recursive,2,512,uniform-random,0,1000,4,table,")


def test_cli_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1 4\n")
    assert main(["boruvka", "--tree", str(bad)]) == 2


def test_python_backend_subprocess_parity(tmp_path):
    # The pure-python backend (TREEPMQ_NUMBA=0) must produce identical
    # answers and comparison counts for the same bench configuration.
    args = [
        sys.executable, "-m", "treepmq.cli", "bench",
        "--algo", "recursive", "--k", "2", "--n", "256",
        "--queries", "500", "--build-repeats", "1", "--no-header",
    ]
    env = dict(os.environ)
    env["TREEPMQ_NUMBA"] = "0"
    py = subprocess.run(args, env=env, capture_output=True, text=True, check=True)
    env["TREEPMQ_NUMBA"] = "1"
    nb = subprocess.run(args, env=env, capture_output=True, text=True, check=True)

    def stable(row: str):
        f = row.strip().split(",")
        return f[:8] + [f[9]] + f[11:]  # drop build_ms and avg_query_ns

    assert stable(py.stdout) == stable(nb.stdout)
