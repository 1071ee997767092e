"""Command-line front end.

Subcommands: gen, boruvka, build, query, bench, verify-mst, ack, selftest.
File formats are documented in the README; `--out -` (the default) writes to
stdout.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
import time

import numpy as np

from . import __version__
from ._accel import backend_name
from .ackermann import SATURATED, ackermann, alpha, lambda_row
from .bench import CSV_HEADER, BenchConfig, run_bench, run_bench_subprocess
from .boruvka import BalanceParams, build_balanced_boruvka, build_boruvka
from .cartesian import CartesianOracle
from .generate import SHAPES, random_tree
from .mstverify import parse_graph
from .oracles import brute_query_many, build_basic, build_recursive
from .selftest import run_selftest
from .tree import NONE_WEIGHT, TreeFormatError, parse_queries, parse_tree, serialize_tree


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _open_out(path: str):
    if path == "-":
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _parse_k(value: str):
    return "alpha" if value == "alpha" else int(value)


def _add_oracle_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algo", default="recursive", choices=["brute", "cartesian", "basic", "recursive"])
    p.add_argument("--k", type=_parse_k, default=2, help="recursion steps, or 'alpha'")
    p.add_argument("--c", type=int, default=4, help="degree cap of the balanced builder")
    p.add_argument("--strategy", default="table", choices=["table", "persistent"])


def _build_oracle(args, tree):
    if args.algo == "cartesian":
        return CartesianOracle(tree)
    if args.algo == "basic":
        return build_basic(build_balanced_boruvka(tree, BalanceParams(args.c)))
    k = alpha(tree.n) if args.k == "alpha" else args.k
    return build_recursive(tree, k=k, params=BalanceParams(args.c), strategy=args.strategy)


def cmd_gen(args) -> int:
    t = random_tree(args.n, args.shape, args.seed, duplicate_weights=args.duplicates)
    with _open_out(args.out) as fh:
        fh.write(serialize_tree(t))
    return 0


def cmd_boruvka(args) -> int:
    t = parse_tree(_read(args.tree))
    if args.balanced:
        b = build_balanced_boruvka(t, BalanceParams(args.c))
    else:
        b = build_boruvka(t)
    r = b.rooted
    with _open_out(args.out) as fh:
        fh.write(f"{b.size}\n")
        for v in range(b.size):
            w = 0 if v == r.root else int(r.parent_weight[v])
            fh.write(f"{int(r.parent[v])} {w}\n")
        fh.write(f"{b.n_original}\n")
        fh.write(" ".join(str(int(x)) for x in b.leaf_of) + "\n")
    return 0


def cmd_build(args) -> int:
    t = parse_tree(_read(args.tree))
    t0 = time.perf_counter()
    oracle = _build_oracle(args, t) if args.algo != "brute" else None
    ms = (time.perf_counter() - t0) * 1e3
    print(f"algo={args.algo} n={t.n} backend={backend_name()}")
    if oracle is None:
        print("build_ms=0.000 oracle_bytes=0 (brute force has no preprocessing)")
        return 0
    extra = ""
    if hasattr(oracle, "boruvka"):
        b = oracle.boruvka
        extra = f" contraction_nodes={b.size} height={b.height}"
    print(f"build_ms={ms:.3f} oracle_bytes={oracle.nbytes}{extra}")
    return 0


def cmd_query(args) -> int:
    t = parse_tree(_read(args.tree))
    pairs = parse_queries(_read(args.queries))
    for u, v in pairs:
        if not (0 <= u < t.n and 0 <= v < t.n):
            raise TreeFormatError(f"query ({u}, {v}) out of range [0, {t.n})")
    us = np.array([p[0] for p in pairs], dtype=np.int64)
    vs = np.array([p[1] for p in pairs], dtype=np.int64)
    if args.algo == "brute":
        ans, cnt = brute_query_many(t, us, vs)
    else:
        oracle = _build_oracle(args, t)
        ans, cnt = oracle.query_many(us, vs)
    with _open_out(args.out) as fh:
        for a, c in zip(ans, cnt):
            text = "none" if a == NONE_WEIGHT else str(int(a))
            fh.write(f"{text} {int(c)}\n")
    return 0


def cmd_bench(args) -> int:
    cfg = BenchConfig(
        algo=args.algo,
        k=args.k,
        n=args.n,
        shape=args.shape,
        seed=args.seed,
        query_count=args.queries,
        c=args.c,
        strategy=args.strategy,
    )
    with _open_out(args.out) as fh:
        if args.compare_backends:
            fh.write("backend," + CSV_HEADER + "\n")
            for backend in ("numba", "python"):
                row = run_bench_subprocess(cfg, backend, args.build_repeats)
                fh.write(f"{backend},{row}\n")
        else:
            if not args.no_header:
                fh.write(CSV_HEADER + "\n")
            fh.write(run_bench(cfg, args.build_repeats).csv() + "\n")
    return 0


def cmd_verify_mst(args) -> int:
    try:
        g = parse_graph(_read(args.graph))
        t = parse_tree(_read(args.tree))
        report = verify = None
        from .mstverify import verify_mst

        report = verify_mst(g, t, k=args.k if args.k != "alpha" else alpha(g.n))
    except (TreeFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if report.verdict:
        print("verdict: minimum spanning tree")
        return 0
    print("verdict: not minimum")
    for i in report.violations:
        print(f"{int(g.eu[i])} {int(g.ev[i])} {int(g.ew[i])}")
    return 1


def cmd_ack(args) -> int:
    print("# A(m, n)")
    for m in range(args.max_m + 1):
        for n in range(args.max_n + 1):
            v = ackermann(m, n)
            print(f"{m} {n} {'saturated' if v is SATURATED else int(v)}")
    print("# lambda_k(n)")
    for k in range(args.max_m + 1):
        n = 2
        while n <= 1 << 20:
            print(f"{k} {n} {lambda_row(k, n)}")
            n <<= 4
    print("# alpha(n)")
    n = 1
    while n <= 10**9:
        print(f"{n} {alpha(n)} {lambda_row(alpha(n), n)}")
        n *= 1000
    return 0


def cmd_selftest(args) -> int:
    failures = run_selftest(emit=print, inject_boundary_bug=args.inject_boundary_bug)
    print(f"selftest: {'PASS' if failures == 0 else f'{failures} section(s) FAILED'}")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="treepmq", description=__doc__)
    ap.add_argument("--version", action="version", version=f"treepmq {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random weighted tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", default="uniform-random", choices=list(SHAPES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--duplicates", action="store_true", help="allow duplicate weights")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("boruvka", help="write the contraction tree of a tree file")
    p.add_argument("--tree", required=True)
    p.add_argument("--balanced", action="store_true")
    p.add_argument("--c", type=int, default=4)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_boruvka)

    p = sub.add_parser("build", help="build an oracle and print its stats")
    p.add_argument("--tree", required=True)
    _add_oracle_flags(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("query", help="answer a query file: one 'answer comparisons' per line")
    p.add_argument("--tree", required=True)
    p.add_argument("--queries", required=True)
    p.add_argument("--out", default="-")
    _add_oracle_flags(p)
    p.set_defaults(fn=cmd_query)

    p = sub.add_parser("bench", help="run one benchmark configuration, emit CSV")
    p.add_argument("--n", type=int, default=1 << 16)
    p.add_argument("--shape", default="uniform-random", choices=list(SHAPES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--queries", type=int, default=100_000)
    p.add_argument("--build-repeats", type=int, default=5)
    p.add_argument("--out", default="-")
    p.add_argument("--no-header", action="store_true")
    p.add_argument(
        "--compare-backends",
        action="store_true",
        help="run the same config under the numba and pure-python backends",
    )
    _add_oracle_flags(p)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("verify-mst", help="check a spanning tree is minimum (exit 0/1/2)")
    p.add_argument("--graph", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--k", type=_parse_k, default=2)
    p.set_defaults(fn=cmd_verify_mst)

    p = sub.add_parser("ack", help="print Ackermann and inverse tables")
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(fn=cmd_ack)

    p = sub.add_parser("selftest", help="run the reduced invariant battery")
    p.add_argument("--inject-boundary-bug", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_selftest)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except TreeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
