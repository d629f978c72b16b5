"""Command line front end.

Subcommands: build, bench, window, fuzz, stats.  All flags are
long-form.  Reports are CSV (see workload module docstring for the
column order), written to --output or stdout.

Exit codes: 0 success, 1 I/O or data error, 2 usage error, 3 fuzz
found at least one invariant violation or oracle disagreement.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .errors import DynConnError, KTooLarge, MissingTimestamps, ParseError
from .workload import (
    MetricsReport,
    build_index,
    index_ops,
    load_edge_file,
    run_connectivity_fuzz,
    run_random_cycle,
    run_sliding_window,
    run_two_ec_fuzz,
)


@dataclass
class CliConfig:
    command: str
    input: str | None = None
    seed: int = 0
    k: int = 0
    pcts: tuple = ()
    queries: int = 100_000
    mode: str = "conn"
    output: str | None = None
    n: int = 64
    ops: int = 50_000
    check_every: int = 100


def _build_parser():
    p = argparse.ArgumentParser(
        prog="dynconn",
        description="dynamic connectivity / 2-edge connectivity benchmarks",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--input", required=True, help="edge list file")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--mode", choices=("conn", "2ec"), default="conn")
        sp.add_argument("--output", default=None, help="CSV path (default stdout)")

    b = sub.add_parser("build", help="ingest an edge list, report index statistics")
    common(b)

    bench = sub.add_parser("bench", help="random delete/re-insert cycle benchmark")
    common(bench)
    bench.add_argument("--k", type=int, required=True, help="edges to cycle")
    bench.add_argument("--queries", type=int, default=100_000,
                       help="query batch after the cycle (0 to skip)")

    w = sub.add_parser("window", help="temporal sliding-window replay")
    common(w)
    w.add_argument("--pct", default="5,10,20,40,80",
                   help="comma-separated window sizes as %% of the time span")
    w.add_argument("--queries", type=int, default=100_000,
                   help="query batch on each final window (0 to skip)")

    f = sub.add_parser("fuzz", help="differential fuzz against BFS oracles")
    common(f, needs_input=False)
    f.add_argument("--n", type=int, default=64)
    f.add_argument("--ops", type=int, default=50_000)
    f.add_argument("--check-every", type=int, default=100)

    s = sub.add_parser("stats", help="stream statistics without building an index")
    s.add_argument("--input", required=True)
    s.add_argument("--output", default=None)
    return p


def _config_from(ns, parser):
    cfg = CliConfig(command=ns.command)
    for name in ("input", "seed", "mode", "output", "k", "queries", "n", "ops"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if hasattr(ns, "check_every"):
        cfg.check_every = ns.check_every
    if hasattr(ns, "pct"):
        try:
            cfg.pcts = tuple(int(x) for x in ns.pct.split(",") if x.strip())
        except ValueError:
            parser.error(f"--pct must be comma-separated integers, got {ns.pct!r}")
        if not cfg.pcts or any(not 0 < x <= 100 for x in cfg.pcts):
            parser.error("--pct values must lie in (0, 100]")
    return cfg


# -- subcommands -------------------------------------------------------------


def _cmd_build(cfg):
    stream = load_edge_file(cfg.input)
    t0 = time.perf_counter()
    idx, dup = build_index(stream, cfg.mode)
    wall = time.perf_counter() - t0
    rep = MetricsReport()
    rep.extras["vertices"] = stream.n
    rep.extras["edges"] = idx.graph.m
    rep.extras["events"] = len(stream.events)
    rep.extras["duplicate_events"] = dup
    rep.extras["dropped_self_loops"] = stream.dropped_self_loops
    if cfg.mode == "2ec":
        stats = idx.ecc2_stats()
        rep.extras["classes"] = stats["classes"]
        rep.extras["largest_class"] = stats["largest_class"]
        rep.extras["bridges"] = stats["bridges"]
    else:
        stats = idx.component_stats()
        rep.extras["components"] = stats["components"]
        rep.extras["largest_component"] = stats["largest_component"]
    rep.avg_depth_id = idx.forest.average_depth()
    rep.extras["build_seconds"] = wall
    return rep, 0


def _cmd_bench(cfg):
    stream = load_edge_file(cfg.input)
    idx, _ = build_index(stream, cfg.mode)
    rep = run_random_cycle(idx, cfg.k, cfg.seed)
    if cfg.queries:
        import random as _random

        rng = _random.Random(cfg.seed)
        _, _, query = index_ops(idx)
        n = stream.n
        t0 = time.perf_counter_ns()
        for _ in range(cfg.queries):
            query(rng.randrange(n), rng.randrange(n))
        rep.timings_ns["query"] = (
            (time.perf_counter_ns() - t0) / cfg.queries,
            cfg.queries,
        )
        rep.counts["query"] = cfg.queries
    return rep, 0


def _cmd_window(cfg):
    stream = load_edge_file(cfg.input)
    rep = MetricsReport()
    for pct in cfg.pcts:
        rep.merge(run_sliding_window(stream, pct, cfg.mode, cfg.queries, cfg.seed))
    return rep, 0


def _cmd_fuzz(cfg):
    if cfg.mode == "2ec":
        out = run_two_ec_fuzz(cfg.n, cfg.ops, cfg.seed, cfg.check_every)
    else:
        out = run_connectivity_fuzz(cfg.n, cfg.ops, cfg.seed, cfg.check_every)
    rep = MetricsReport()
    rep.extras["fuzz_n"] = cfg.n
    rep.extras["fuzz_ops"] = out.ops
    rep.extras["fuzz_queries"] = out.queries
    rep.extras["fuzz_checks"] = out.checks
    rep.extras["fuzz_violations"] = out.violation_count
    rep.extras["fuzz_seconds"] = out.elapsed_s
    if out.find_calls:
        rep.avg_finds_len = out.find_visits / out.find_calls
    for msg in out.violations:
        print(f"violation: {msg}", file=sys.stderr)
    return rep, (0 if out.ok else 3)


def _cmd_stats(cfg):
    stream = load_edge_file(cfg.input)
    rep = MetricsReport()
    edges = set()
    dup = 0
    for ev in stream.events:
        e = (ev.u, ev.v) if ev.u < ev.v else (ev.v, ev.u)
        if e in edges:
            dup += 1
        edges.add(e)
    rep.extras["vertices"] = stream.n
    rep.extras["events"] = len(stream.events)
    rep.extras["unique_edges"] = len(edges)
    rep.extras["duplicate_events"] = dup
    rep.extras["dropped_self_loops"] = stream.dropped_self_loops
    rep.extras["timestamped"] = int(stream.timestamped)
    if stream.timestamped and stream.events:
        ts = [e.t for e in stream.events]
        rep.extras["time_span"] = max(ts) - min(ts)
    return rep, 0


_COMMANDS = {
    "build": _cmd_build,
    "bench": _cmd_bench,
    "window": _cmd_window,
    "fuzz": _cmd_fuzz,
    "stats": _cmd_stats,
}


def main(argv=None):
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = _config_from(ns, parser)
    except SystemExit as exc:  # argparse signals usage errors via exit(2)
        return int(exc.code or 0)

    try:
        report, rc = _COMMANDS[cfg.command](cfg)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MissingTimestamps, KTooLarge) as exc:
        # inconsistent flags for the given input (window without
        # timestamps, k beyond the edge count): usage, not I/O
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DynConnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        if cfg.output:
            with open(cfg.output, "w") as fh:
                report.write_csv(fh)
        else:
            report.write_csv(sys.stdout)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return rc


if __name__ == "__main__":
    sys.exit(main())
